#pragma once

#include <stdexcept>
#include <string>

namespace equiloc {

// Every failure mode carries a stable kind tag so callers (and the CLI exit
// code logic) can dispatch without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

inline Error rank_mismatch(const std::string& what) { return {"RankMismatch", what}; }
inline Error not_polynomial(const std::string& what) { return {"NotPolynomial", what}; }
inline Error pole_at_zero(const std::string& what) { return {"PoleAtZero", what}; }
inline Error non_generic_polarization(const std::string& what) { return {"NonGenericPolarization", what}; }
inline Error unsupported_type(const std::string& what) { return {"UnsupportedType", what}; }
inline Error not_weyl_symmetric(const std::string& what) { return {"NotWeylSymmetric", what}; }
inline Error unpointed_parts(const std::string& what) { return {"UnpointedParts", what}; }
inline Error not_delzant(const std::string& what) { return {"NotDelzant", what}; }
inline Error non_integral_vertex(const std::string& what) { return {"NonIntegralVertex", what}; }
inline Error not_regular(const std::string& what) { return {"NotRegular", what}; }
inline Error fixed_submanifold(const std::string& what) { return {"FixedSubmanifold", what}; }
inline Error on_wall(const std::string& what) { return {"OnWall", what}; }
inline Error not_a_wall_point(const std::string& what) { return {"NotAWallPoint", what}; }
inline Error missing_k_structure(const std::string& what) { return {"MissingKStructure", what}; }
inline Error rank_unsupported(const std::string& what) { return {"RankUnsupported", what}; }
inline Error invalid_parameter(const std::string& what) { return {"InvalidParameter", what}; }
inline Error degenerate_cone(const std::string& what) { return {"DegenerateCone", what}; }

} // namespace equiloc
