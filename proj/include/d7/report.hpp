#pragma once

#include <chrono>
#include <string>
#include <utility>

namespace d7 {

/// Structured outcome of a verification check.  A failing report always
/// carries a counterexample.
struct Report {
    std::string name;
    std::string params;
    bool pass = false;
    std::string counterexample;  // empty iff pass
    long millis = 0;
    long trunc_used = 0;

    static Report ok(std::string name, std::string params, long trunc = 0) {
        return {std::move(name), std::move(params), true, "", 0, trunc};
    }
    static Report fail(std::string name, std::string params, std::string counterexample,
                       long trunc = 0) {
        if (counterexample.empty()) counterexample = "(unspecified)";
        return {std::move(name), std::move(params), false, std::move(counterexample), 0, trunc};
    }

    // check=<name> params=<...> status=... counterexample="..." trunc=<T> millis=<ms>
    std::string render() const {
        std::string s = "check=" + name + " params=" + (params.empty() ? "-" : params) +
                        " status=" + (pass ? "PASS" : "FAIL") + " counterexample=\"" +
                        (pass ? "-" : counterexample) + "\" trunc=" + std::to_string(trunc_used) +
                        " millis=" + std::to_string(millis);
        return s;
    }
};

// Run a report-producing closure and stamp its elapsed wall time.
template <typename F>
Report timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

}  // namespace d7
