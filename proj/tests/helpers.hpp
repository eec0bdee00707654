#pragma once

#include <utility>

#include "discseq/error.hpp"

// Runs f and reports which ErrorCode it raised; sentinel values mark "did not
// throw" (-1) and "threw something else" (-2) so tests read as one CHECK.
template <typename F>
inline discseq::ErrorCode code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const discseq::Error& e) {
        return e.code();
    } catch (...) {
        return static_cast<discseq::ErrorCode>(-2);
    }
    return static_cast<discseq::ErrorCode>(-1);
}
