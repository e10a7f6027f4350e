#ifndef CGA_JSON_IO_HPP
#define CGA_JSON_IO_HPP

#include "cga/lie_algebra.hpp"
#include "cga/linalg.hpp"
#include "cga/matrix.hpp"
#include "cga/suite.hpp"
#include "cga/two_local.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace cga {

/// Decode failure with the JSON-pointer-ish location of the offending value
/// ("/brackets/2/coeffs/5"); syntactic failures carry the byte offset.
class JsonParseError : public std::runtime_error {
public:
    JsonParseError(const std::string& message, std::string location)
        : std::runtime_error(location.empty() ? message : message + " (at " + location + ")"),
          location_(std::move(location)) {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

// Canonical JSON text: two-space indent, keys in fixed order, rationals as
// reduced strings. encode(decode(s)) == s for canonical inputs; decoders
// reject non-canonical scalars rather than normalizing them.

std::string encode_matrix(const RationalMatrix& m);
RationalMatrix decode_matrix(std::string_view text);

std::string encode_subspace(const Subspace& s);
Subspace decode_subspace(std::string_view text);

std::string encode_algebra(const LieAlgebra& a);
LieAlgebra decode_algebra(std::string_view text);

std::string encode_resolve_report(const ResolveReport& r);
ResolveReport decode_resolve_report(std::string_view text, const LieAlgebra& a);

std::string encode_suite_report(const SuiteReport& r);
SuiteReport decode_suite_report(std::string_view text);

/// derivations artifact: dim, outer dimension, delta, ad basis, split flag.
std::string encode_derivation_summary(const DerivationSpace& ders);

}  // namespace cga

#endif
