#include "discseq/kernels.hpp"

#include <stdexcept>
#include <string>

namespace discseq::kernels {

bool avx2_available() {
#if defined(DISCSEQ_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Ops* pick_auto() {
#if defined(DISCSEQ_HAVE_AVX2)
    if (avx2_available()) return &avx2_ops;
#endif
    return &scalar_ops;
}

const Ops*& active_slot() {
    static const Ops* slot = pick_auto();
    return slot;
}

} // namespace

const Ops& active() { return *active_slot(); }

void select(const char* name) {
    const std::string want(name);
    if (want == "auto") {
        active_slot() = pick_auto();
        return;
    }
    if (want == "scalar") {
        active_slot() = &scalar_ops;
        return;
    }
    if (want == "avx2") {
#if defined(DISCSEQ_HAVE_AVX2)
        if (avx2_available()) {
            active_slot() = &avx2_ops;
            return;
        }
#endif
        throw std::runtime_error("avx2 backend not available on this machine");
    }
    throw std::runtime_error("unknown kernel backend: " + want);
}

} // namespace discseq::kernels
