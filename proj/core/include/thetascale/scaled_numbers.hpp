#pragma once

#include <cmath>
#include <string>

#include "thetascale/errors.hpp"

namespace thetascale {

// A number structure carrying its own scale. Values inside the structure are
// stored as raw doubles; a raw value v stands for the represented number v/r.
// The structure with r = 1 is the ordinary one.
struct ScaledStructure {
    double scale = 1.0;
    std::string ref = "x"; // label of the reference point the structure is tied to

    ScaledStructure() = default;
    ScaledStructure(double r, std::string ref_label) : scale(r), ref(std::move(ref_label)) {
        if (!(scale > 0.0) || !std::isfinite(scale))
            throw domain_error("structure scale must be positive and finite");
    }

    bool operator==(const ScaledStructure& o) const {
        return scale == o.scale && ref == o.ref;
    }
};

struct ScaledValue {
    double value = 0.0;
    ScaledStructure st;
};

inline void require_same_structure(const ScaledValue& a, const ScaledValue& b) {
    if (!(a.st == b.st))
        throw structure_mismatch_error("values belong to different scaled structures (" +
                                       a.st.ref + " scale " + std::to_string(a.st.scale) +
                                       " vs " + b.st.ref + " scale " +
                                       std::to_string(b.st.scale) + ")");
}

// The multiplicative identity of a scaled structure is the value r itself.
inline ScaledValue identity(const ScaledStructure& st) { return {st.scale, st}; }

inline ScaledValue from_represented(const ScaledStructure& st, double a) {
    return {st.scale * a, st};
}

inline double represented(const ScaledValue& v) { return v.value / v.st.scale; }

// Addition and subtraction are the ordinary ones inside a structure.
inline ScaledValue scaled_add(const ScaledValue& a, const ScaledValue& b) {
    require_same_structure(a, b);
    return {a.value + b.value, a.st};
}

inline ScaledValue scaled_sub(const ScaledValue& a, const ScaledValue& b) {
    require_same_structure(a, b);
    return {a.value - b.value, a.st};
}

inline ScaledValue scaled_mul(const ScaledValue& a, const ScaledValue& b) {
    require_same_structure(a, b);
    return {a.value * b.value / a.st.scale, a.st};
}

inline ScaledValue scaled_div(const ScaledValue& a, const ScaledValue& b) {
    require_same_structure(a, b);
    if (b.value == 0.0) throw domain_error("scaled division by zero");
    return {a.st.scale * a.value / b.value, a.st};
}

// Analytic functions act through the represented value: the result is the
// scale times f of the represented argument.
template <typename F>
ScaledValue scaled_apply_analytic(F&& f, const ScaledValue& a) {
    return {a.st.scale * f(represented(a)), a.st};
}

// Move a value from its structure into another one. The raw value picks up
// the ratio of scales; the represented number is unchanged.
inline ScaledValue rescale(const ScaledValue& v, const ScaledStructure& to) {
    return {v.value * (to.scale / v.st.scale), to};
}

} // namespace thetascale
