#ifndef IELKIT_REPORT_HPP
#define IELKIT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ielkit/arity.hpp"
#include "ielkit/charset.hpp"
#include "ielkit/iel.hpp"

namespace iel {

// Everything the analyze pipeline produces for one expression, in plain
// serializable form.  cardinalities/coefficients are meaningful only
// when iel is true, the witnesses only when it is false.
struct IdentityReport {
    int n = 0;
    std::string expression;
    std::vector<std::vector<int>> characteristic_set;
    bool iel = false;
    std::vector<int> cardinalities;
    std::vector<std::int64_t> coefficients;
    std::optional<std::vector<int>> witness_in;
    std::optional<std::vector<int>> witness_out;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

IdentityReport make_report(const std::string& text, const CharSet& s,
                           const IelDecision& d);

// Parse, compile, decide: the full pipeline.
IdentityReport analyze(const std::string& text, Arity arity);

// Plain-text rendering: the identity line for the positive case, the
// two-line witness explanation otherwise.
std::string render_text(const IdentityReport& r);

// LaTeX rendering of the same content.
std::string render_latex(const IdentityReport& r);

// Compact JSON with fixed key order.
std::string render_json(const IdentityReport& r);

// Inverse of render_json; throws Error on malformed input.
IdentityReport report_from_json(const std::string& text);

}  // namespace iel

#endif  // IELKIT_REPORT_HPP
