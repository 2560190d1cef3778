#pragma once

#include <stdexcept>
#include <string>

namespace pvg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PVG_DEFINE_ERROR(Name)                                          \
    struct Name : Error {                                               \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

PVG_DEFINE_ERROR(DuplicatePoints);
PVG_DEFINE_ERROR(NotHullVertex);
PVG_DEFINE_ERROR(SizeMismatch);
PVG_DEFINE_ERROR(BudgetExceeded);
PVG_DEFINE_ERROR(ParseError);
PVG_DEFINE_ERROR(NotThreeSat);
PVG_DEFINE_ERROR(GeometryDegeneracy);
PVG_DEFINE_ERROR(StructuralViolation);
PVG_DEFINE_ERROR(EnumerationOverflow);
PVG_DEFINE_ERROR(WitnessNotTricoloured);
PVG_DEFINE_ERROR(NotReduced);
PVG_DEFINE_ERROR(InternalInconsistency);

#undef PVG_DEFINE_ERROR

}  // namespace pvg
