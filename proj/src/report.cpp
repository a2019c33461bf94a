#include "ielkit/report.hpp"

#include <json.hpp>

#include "ielkit/eval.hpp"
#include "ielkit/expr.hpp"

namespace iel {

namespace {

SubsetMask mask_from_indices(const std::vector<int>& indices) {
    SubsetMask m;
    for (int i : indices) m.bits |= std::uint32_t{1} << (i - 1);
    return m;
}

// "({1},∅,∅)" for the indicator sequence ^I A at arity n.
std::string indicator_text(const std::vector<int>& index_set, int n) {
    SubsetMask m = mask_from_indices(index_set);
    std::string out = "(";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) out += ',';
        out += m.contains(i) ? "{1}" : "∅";
    }
    out += ')';
    return out;
}

std::string set_text(const std::vector<int>& indices) {
    return mask_to_string(mask_from_indices(indices));
}

// One identity term, e.g. "2*i_{3,3}(A)" or "2\,i_{3,3}(\mathcal{A})".
std::string combination(const std::vector<std::int64_t>& coeffs, int n,
                        bool latex) {
    const char* arg = latex ? "(\\mathcal{A})" : "(A)";
    std::string out;
    bool first = true;
    for (int k = 1; k <= n; ++k) {
        std::int64_t c = coeffs[static_cast<std::size_t>(k) - 1];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) {
            out += std::to_string(mag);
            out += latex ? "\\," : "*";
        }
        out += "i_{" + std::to_string(n) + "," + std::to_string(k) + "}";
        out += arg;
        first = false;
    }
    if (first) out = "0";
    return out;
}

}  // namespace

IdentityReport make_report(const std::string& text, const CharSet& s,
                           const IelDecision& d) {
    IdentityReport r;
    r.n = s.arity().value();
    r.expression = text;
    r.characteristic_set = charset_to_lists(s);
    r.iel = d.is_like;
    if (d.is_like) {
        r.cardinalities = d.cardinalities.values();
        r.coefficients = d.coefficients;
    } else {
        r.witness_in = indices_of(*d.witness_in);
        r.witness_out = indices_of(*d.witness_out);
    }
    return r;
}

IdentityReport analyze(const std::string& text, Arity arity) {
    ExprPtr e = parse(text, arity);
    CharSet s = charset_of(*e, arity);
    return make_report(text, s, decide(s));
}

std::string render_text(const IdentityReport& r) {
    if (r.iel)
        return "|E(A)| = " + combination(r.coefficients, r.n, false);
    int card = static_cast<int>(r.witness_in->size());
    std::string in = set_text(*r.witness_in);
    std::string out = set_text(*r.witness_out);
    return "not inclusion-exclusion-like: " + in +
           " is in the characteristic set but " + out +
           " is not, though both have cardinality " + std::to_string(card) +
           "\nwitness: ^" + in + "A = " + indicator_text(*r.witness_in, r.n) +
           " and ^" + out + "A = " + indicator_text(*r.witness_out, r.n) +
           " have equal i-vectors but cardinalities 1 vs 0";
}

std::string render_latex(const IdentityReport& r) {
    if (r.iel)
        return "|E(\\mathcal{A})| = " + combination(r.coefficients, r.n, true);
    auto braces = [](const std::vector<int>& v) {
        std::string s = "\\{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "\\}";
    };
    return "\\text{not inclusion-exclusion-like: } " + braces(*r.witness_in) +
           " \\in S,\\ " + braces(*r.witness_out) + " \\notin S";
}

std::string render_json(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["expression"] = r.expression;
    j["characteristic_set"] = r.characteristic_set;
    j["iel"] = r.iel;
    if (r.iel) {
        j["cardinalities"] = r.cardinalities;
        j["coefficients"] = r.coefficients;
    } else {
        j["witness_in"] = *r.witness_in;
        j["witness_out"] = *r.witness_out;
    }
    return j.dump();
}

namespace {

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
    if (!j.is_array())
        throw Error(std::string("report field '") + key +
                    "' must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw Error(std::string("report field '") + key +
                        "' must contain only integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

IdentityReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid report JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("report JSON must be an object");
    for (const char* key : {"n", "expression", "characteristic_set", "iel"})
        if (!j.contains(key))
            throw Error(std::string("report JSON lacks field '") + key + "'");

    IdentityReport r;
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw Error("report field 'n' must be a positive integer");
    r.n = j["n"].get<int>();
    if (!j["expression"].is_string())
        throw Error("report field 'expression' must be a string");
    r.expression = j["expression"].get<std::string>();
    if (!j["characteristic_set"].is_array())
        throw Error("report field 'characteristic_set' must be an array");
    for (const auto& member : j["characteristic_set"])
        r.characteristic_set.push_back(int_list(member, "characteristic_set"));
    if (!j["iel"].is_boolean())
        throw Error("report field 'iel' must be a boolean");
    r.iel = j["iel"].get<bool>();

    if (r.iel) {
        for (const char* key : {"cardinalities", "coefficients"})
            if (!j.contains(key))
                throw Error(std::string("report JSON lacks field '") + key + "'");
        r.cardinalities = int_list(j["cardinalities"], "cardinalities");
        if (!j["coefficients"].is_array())
            throw Error("report field 'coefficients' must be an array of integers");
        for (const auto& x : j["coefficients"]) {
            if (!x.is_number_integer())
                throw Error("report field 'coefficients' must contain only integers");
            r.coefficients.push_back(x.get<std::int64_t>());
        }
        if (r.coefficients.size() != static_cast<std::size_t>(r.n))
            throw Error("report field 'coefficients' must have exactly n entries");
    } else {
        for (const char* key : {"witness_in", "witness_out"})
            if (!j.contains(key))
                throw Error(std::string("report JSON lacks field '") + key + "'");
        r.witness_in = int_list(j["witness_in"], "witness_in");
        r.witness_out = int_list(j["witness_out"], "witness_out");
        if (r.witness_in->size() != r.witness_out->size())
            throw Error("report witnesses must have equal cardinalities");
    }
    return r;
}

}  // namespace iel
