#pragma once

// Job specs, JSON serialization, DOT export and command dispatch. The
// command-line front end only turns argv into a JobSpec and calls run().
//
// Exit codes: 0 success, 1 domain error, 2 schema error. Errors are written
// as {"error": {"kind": ..., "message": ...}}.

#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modp/classify.hpp"
#include "modp/eigen.hpp"
#include "modp/field.hpp"
#include "modp/hecke.hpp"
#include "modp/hecke0.hpp"
#include "modp/oracle.hpp"
#include "modp/poset.hpp"
#include "modp/root_datum.hpp"
#include "modp/weights.hpp"

namespace modp::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitSchema = 2;
inline constexpr const char* kFieldEnv = "MODP_FIELD";

class schema_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FieldSpec {
    std::int64_t p = 3;
    poly::Poly modulus;  // low to high, monic; empty means the prime field
};

struct JobSpec {
    std::string command;
    json params = json::object();
    std::optional<FieldSpec> field;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"satake", "classify", "lattice", "hecke0", "weights", "eigen", "verify"};
    return c;
}

// ---- field -----------------------------------------------------------------

// "p" or "p:c0,c1,...,1"
inline FieldSpec parse_field_string(const std::string& s) {
    FieldSpec f;
    try {
        const auto colon = s.find(':');
        std::size_t used = 0;
        const std::string head = s.substr(0, colon);
        f.p = std::stoll(head, &used);
        if (used != head.size()) throw schema_error("bad characteristic");
        if (colon != std::string::npos) {
            std::string rest = s.substr(colon + 1);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                const auto comma = rest.find(',', pos);
                const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                std::size_t u = 0;
                f.modulus.push_back(std::stoll(tok, &u));
                if (u != tok.size()) throw schema_error("bad coefficient");
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    } catch (const std::logic_error&) {
        throw schema_error("field must look like \"p\" or \"p:c0,c1,...,1\", got \"" + s + "\"");
    }
    return f;
}

inline FieldSpec parse_field_json(const json& j) {
    if (j.is_string()) return parse_field_string(j.get<std::string>());
    if (j.is_number_integer()) return FieldSpec{j.get<std::int64_t>(), {}};
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer())
        throw schema_error("scalar_field must be {\"p\": int, \"modulus\": [c0, ..., 1]}");
    FieldSpec f;
    f.p = j["p"].get<std::int64_t>();
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) throw schema_error("modulus must be an array of integers");
        for (const auto& c : j["modulus"]) {
            if (!c.is_number_integer()) throw schema_error("modulus must be an array of integers");
            f.modulus.push_back(c.get<std::int64_t>());
        }
    }
    if (j.contains("m") && j["m"].is_number_integer() && !f.modulus.empty() &&
        j["m"].get<int>() != static_cast<int>(f.modulus.size()) - 1)
        throw schema_error("m disagrees with the modulus degree");
    return f;
}

inline const FiniteField& field_from(const FieldSpec& f) {
    if (f.modulus.empty()) return FiniteField::prime(f.p);
    return FiniteField::get(f.p, f.modulus);
}

inline json field_json(const FiniteField& F) {
    json j;
    j["p"] = F.characteristic();
    j["m"] = F.degree();
    j["modulus"] = F.modulus();
    return j;
}

// ---- basic values ----------------------------------------------------------

inline json scalar_json(const Scalar& s) {
    if (s.field().degree() == 1) return s.coeffs()[0];
    return s.coeffs();
}

inline Scalar parse_scalar(const json& j, const FiniteField& F) {
    if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
    if (j.is_array()) {
        std::vector<std::int64_t> c;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw schema_error("field element coefficients must be integers");
            c.push_back(x.get<std::int64_t>());
        }
        if (static_cast<int>(c.size()) > F.degree()) throw schema_error("too many coefficients for the scalar field (set --field or " + std::string(kFieldEnv) + ")");
        return F.from_coeffs(c);
    }
    if (j.is_string()) {
        json inner;
        try {
            inner = json::parse(j.get<std::string>());
        } catch (const json::exception&) {
            throw schema_error("cannot read field element \"" + j.get<std::string>() + "\"");
        }
        if (inner.is_string()) throw schema_error("field element must be an integer or coefficient array");
        return parse_scalar(inner, F);
    }
    throw schema_error("field element must be an integer or coefficient array");
}

inline std::vector<int> parse_ints(const json& j, const std::string& what) {
    std::vector<int> v;
    if (j.is_array()) {
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw schema_error(what + " must contain integers");
            v.push_back(x.get<int>());
        }
        return v;
    }
    if (!j.is_string()) throw schema_error(what + " must be \"a,b,...\" or an integer array");
    const auto s = j.get<std::string>();
    try {
        return IntVec<struct AnyTag>::parse(s).entries();
    } catch (const std::exception&) {
        throw schema_error(what + ": cannot parse \"" + s + "\"");
    }
}

inline const json& need(const json& params, const std::string& key) {
    if (!params.is_object() || !params.contains(key)) throw schema_error("missing parameter \"" + key + "\"");
    return params[key];
}

inline int need_int(const json& params, const std::string& key) {
    const auto& v = need(params, key);
    if (!v.is_number_integer()) throw schema_error("parameter \"" + key + "\" must be an integer");
    return v.get<int>();
}

inline int int_or(const json& params, const std::string& key, int fallback) {
    return params.contains(key) ? need_int(params, key) : fallback;
}

inline bool bool_or(const json& params, const std::string& key, bool fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_boolean()) throw schema_error("parameter \"" + key + "\" must be a boolean");
    return params[key].get<bool>();
}

inline std::string string_or(const json& params, const std::string& key, const std::string& fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_string()) throw schema_error("parameter \"" + key + "\" must be a string");
    return params[key].get<std::string>();
}

inline Coweight need_coweight(const json& params, const std::string& key) { return Coweight(parse_ints(need(params, key), key)); }
inline HighestWeight need_weight(const json& params, const std::string& key) { return HighestWeight(parse_ints(need(params, key), key)); }
inline StandardParabolic need_levi(const json& params, const std::string& key) {
    try {
        return StandardParabolic(parse_ints(need(params, key), key));
    } catch (const schema_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw schema_error(key + ": " + e.what());
    }
}

inline json levi_json(const StandardParabolic& P) { return P.composition(); }

inline json weight_json(const WeightClass& V) {
    json j;
    j["nu"] = V.nu().key();
    j["q"] = V.q();
    j["p"] = V.p();
    return j;
}

inline json levi_weight_json(const LeviWeightClass& V) {
    json j;
    j["levi"] = levi_json(V.levi());
    j["nu"] = V.nu().key();
    j["q"] = V.q();
    return j;
}

// ---- characters, pairs, data ----------------------------------------------

inline json character_json(const SmoothCharacter& c) {
    json j;
    j["unramified"] = scalar_json(c.unramified());
    j["tame"] = c.tame();
    return j;
}

inline SmoothCharacter parse_character(const json& j, const FiniteField& F, int q) {
    if (!j.is_object() || !j.contains("unramified")) throw schema_error("character must be {\"unramified\": ..., \"tame\": int}");
    int tame = 0;
    if (j.contains("tame")) {
        if (!j["tame"].is_number_integer()) throw schema_error("tame must be an integer");
        tame = j["tame"].get<int>();
    }
    return SmoothCharacter(parse_scalar(j["unramified"], F), tame, q);
}

inline json pair_json(const ParamPair& pr) {
    json j;
    j["M"] = levi_json(pr.levi());
    j["chars"] = json::array();
    for (const auto& c : pr.chars()) j["chars"].push_back(character_json(c));
    return j;
}

inline ParamPair parse_pair(const json& j, const FiniteField& F, int q) {
    if (!j.is_object() || !j.contains("chars") || !j["chars"].is_array()) throw schema_error("pair must be {\"M\": [...], \"chars\": [...]}");
    const auto M = need_levi(j, "M");
    std::vector<SmoothCharacter> chars;
    for (const auto& c : j["chars"]) chars.push_back(parse_character(c, F, q));
    return ParamPair(M, std::move(chars));
}

inline json datum_json(const InductionDatum& d) {
    json j;
    j["P"] = levi_json(d.parabolic());
    j["blocks"] = json::array();
    for (const auto& b : d.blocks()) {
        json bj;
        if (const auto* st = as_steinberg(b)) {
            bj["steinberg"]["Q"] = levi_json(st->Q);
            bj["steinberg"]["eta"] = character_json(st->eta);
        } else {
            const auto& ss = std::get<Supersingular>(b);
            bj["supersingular"]["size"] = ss.size;
            bj["supersingular"]["label"] = ss.label;
            bj["supersingular"]["central_char"] = character_json(ss.central_char);
        }
        j["blocks"].push_back(std::move(bj));
    }
    return j;
}

inline InductionDatum parse_datum(const json& j, const FiniteField& F, int q) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) throw schema_error("datum must be {\"P\": [...], \"blocks\": [...]}");
    const auto P = need_levi(j, "P");
    std::vector<BlockRep> blocks;
    int b = 0;
    for (const auto& bj : j["blocks"]) {
        const int size = b < P.num_blocks() ? P.block_size(b) : 0;
        ++b;
        if (bj.contains("steinberg")) {
            const auto& s = bj["steinberg"];
            if (!s.is_object() || !s.contains("eta")) throw schema_error("steinberg block needs \"eta\"");
            const auto Q = s.contains("Q") ? need_levi(s, "Q") : StandardParabolic::whole(std::max(size, 1));
            blocks.emplace_back(Steinberg{Q, parse_character(s["eta"], F, q)});
        } else if (bj.contains("supersingular")) {
            const auto& s = bj["supersingular"];
            if (!s.is_object() || !s.contains("central_char")) throw schema_error("supersingular block needs \"central_char\"");
            blocks.emplace_back(Supersingular{int_or(s, "size", size), string_or(s, "label", "s"),
                                              parse_character(s["central_char"], F, q)});
        } else {
            throw schema_error("each block is {\"steinberg\": ...} or {\"supersingular\": ...}");
        }
    }
    return InductionDatum(P, std::move(blocks));
}

// ---- Hecke elements ---------------------------------------------------------

inline Basis parse_basis(const std::string& s) {
    if (s == "T") return Basis::T;
    if (s == "tau") return Basis::tau;
    throw schema_error("basis must be \"T\" or \"tau\"");
}

inline json terms_json(const HeckeElement& x) {
    json t = json::object();
    for (const auto& [k, c] : x.terms()) t[k.key()] = scalar_json(c);
    return t;
}

inline json hecke_json(const HeckeElement& x) {
    json j;
    j["basis"] = basis_name(x.basis());
    j["levi"] = levi_json(x.levi());
    j["terms"] = terms_json(x);
    return j;
}

inline HeckeElement parse_terms(const json& t, const WeightClass& V, Basis b, const FiniteField& F) {
    if (!t.is_object()) throw schema_error("terms must be an object keyed by \"a,b,...\"");
    HeckeElement x(V, b, F);
    for (const auto& [k, c] : t.items()) x.add_term(Coweight(parse_ints(json(k), "term key")), parse_scalar(c, F));
    return x;
}

// ---- hecke0 ---------------------------------------------------------------

inline Hecke0Word parse_word(const json& j) {
    if (!j.is_array()) throw schema_error("word must be an array like [\"S1\", \"Pi\"]");
    Hecke0Word w;
    for (const auto& x : j) {
        if (!x.is_string()) throw schema_error("word letters are \"S<k>\" or \"Pi\"");
        const auto s = x.get<std::string>();
        if (s == "Pi") {
            w.push_back(kPi);
            continue;
        }
        if (s.size() < 2 || s[0] != 'S') throw schema_error("word letters are \"S<k>\" or \"Pi\"");
        try {
            w.push_back(std::stoi(s.substr(1)));
        } catch (const std::logic_error&) {
            throw schema_error("bad letter \"" + s + "\"");
        }
    }
    return w;
}

inline json hecke0_json(const Hecke0Element& x) {
    json arr = json::array();
    for (const auto& [w, c] : x.terms()) {
        json t;
        t["window"] = w.window();
        t["rotation"] = w.rotation();
        t["length"] = w.length();
        t["coeff"] = scalar_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

inline json derivation_json(const RotationDerivationReport& r) {
    json j;
    j["n"] = r.n;
    j["length_cap"] = r.length_cap;
    j["success"] = r.success;
    j["inconclusive"] = r.inconclusive;
    j["nondegenerate"] = r.nondegenerate;
    j["minimal_sufficient_cap"] = r.minimal_sufficient_cap;
    j["steps"] = json::array();
    for (std::size_t s = 0; s < r.steps.size(); ++s) {
        const auto& st = r.steps[s];
        json sj;
        sj["identity"] = st.identity;
        sj["proved"] = st.proved;
        sj["minimal_cap"] = st.minimal_cap;
        sj["trace_checked"] = st.trace_checked;
        sj["trace"] = json::array();
        for (const auto& line : st.trace) sj["trace"].push_back(line.text);
        sj["chain"] = r.chain(s);
        j["steps"].push_back(std::move(sj));
    }
    return j;
}

// ---- lattices ----------------------------------------------------------------

inline std::string dot_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o;
}

inline std::string lower_set_label(const SubmoduleLattice& L, ElementSet s) {
    std::string label = "{";
    bool first = true;
    for (int i = 0; i < L.order.size(); ++i)
        if (s >> i & 1u) {
            label += (first ? "" : ", ") + L.constituents.elements[static_cast<std::size_t>(i)].to_string();
            first = false;
        }
    return label + "}";
}

// One node per lower set (ordered by size, then bits), one edge per cover.
inline std::string export_lattice_dot(const SubmoduleLattice& L) {
    const auto sets = L.lower_sets();
    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < sets.size(); ++k)
        out += "  n" + std::to_string(k) + " [label=\"" + dot_escape(lower_set_label(L, sets[k])) + "\"];\n";
    for (const auto& [a, b] : covering_pairs(sets)) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    return out + "}\n";
}

inline json members(ElementSet s, int n) {
    json a = json::array();
    for (int i = 0; i < n; ++i)
        if (s >> i & 1u) a.push_back(i);
    return a;
}

inline json lattice_json(const SubmoduleLattice& L) {
    const int n = L.order.size();
    json j;
    j["constituents"] = json::array();
    for (const auto& e : L.constituents.elements) j["constituents"].push_back(datum_json(e.datum()));
    j["order"] = json::array();  // strict relations [a, b] meaning a <_X b
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && L.order.leq(a, b)) j["order"].push_back({a, b});
    j["lower_set_count"] = L.lower_set_count;
    j["lower_sets"] = json::array();
    for (auto s : L.lower_sets()) j["lower_sets"].push_back(members(s, n));
    j["principal"] = json::array();
    for (auto s : L.principal) j["principal"].push_back(members(s, n));
    j["socle"] = L.socle;
    j["cosocle"] = L.cosocle;
    return j;
}

// ---- dispatch ----------------------------------------------------------------

struct Context {
    const FiniteField* F;
    std::optional<int> q;
};

inline std::optional<FieldSpec> env_field() {
    const char* s = std::getenv(kFieldEnv);
    if (!s || !*s) return std::nullopt;
    return parse_field_string(s);
}

// Explicit field, then the environment, then F_p for the job's q, then F_3.
inline Context make_context(const JobSpec& job) {
    Context c{nullptr, std::nullopt};
    if (job.params.contains("q")) c.q = need_int(job.params, "q");
    if (c.q && *c.q < 2) throw std::invalid_argument("q must be at least 2");
    std::optional<FieldSpec> f = job.field;
    if (!f) f = env_field();
    if (f) c.F = &field_from(*f);
    else if (c.q) c.F = &FiniteField::prime(prime_of_prime_power(*c.q));
    else c.F = &FiniteField::prime(3);
    if (c.q && c.F->characteristic() != prime_of_prime_power(*c.q))
        throw std::invalid_argument("scalar field characteristic " + std::to_string(c.F->characteristic()) +
                                    " does not match q = " + std::to_string(*c.q));
    return c;
}

inline int need_q(const Context& c) {
    if (!c.q) throw schema_error("missing parameter \"q\"");
    return *c.q;
}

inline json run_satake(const json& p, const Context& c) {
    const auto op = string_or(p, "op", "expand");
    if (op == "moebius") {
        const auto mu = need_coweight(p, "mu");
        const auto lambda = need_coweight(p, "lambda");
        const auto M = need_levi(p, "levi");
        json j;
        j["integer"] = moebius_int(mu, lambda, M);
        j["value"] = scalar_json(moebius(mu, lambda, M, *c.F));
        return j;
    }
    if (op == "interval") {
        json j;
        j["interval"] = json::array();
        for (const auto& l : interval_above(need_coweight(p, "mu"), need_levi(p, "levi"))) j["interval"].push_back(l.key());
        return j;
    }
    const WeightClass V(need_weight(p, "nu"), need_q(c));
    if (p.contains("n") && need_int(p, "n") != V.rank()) throw std::invalid_argument("n disagrees with the length of nu");
    const Basis in = parse_basis(string_or(p, "basis", "T"));
    if (op == "expand") {
        HeckeElement x(V, in, *c.F);
        if (p.contains("terms")) x = parse_terms(p["terms"], V, in, *c.F);
        else x.add_term(need_coweight(p, "lambda"), c.F->one());
        const Basis out = parse_basis(string_or(p, "to", in == Basis::T ? "tau" : "T"));
        return hecke_json(to_basis(x, out));
    }
    if (op == "multiply") {
        const auto a = parse_terms(need(p, "a"), V, in, *c.F);
        const auto b = parse_terms(need(p, "b"), V, in, *c.F);
        return hecke_json(multiply(a, b));
    }
    throw schema_error("unknown satake op \"" + op + "\"");
}

inline json run_classify(const json& p, const Context& c) {
    const auto op = string_or(p, "op", "constituents");
    if (op == "principal-series") {
        const auto& arr = need(p, "chars");
        if (!arr.is_array()) throw schema_error("chars must be an array");
        std::vector<SmoothCharacter> chars;
        for (const auto& x : arr) chars.push_back(parse_character(x, *c.F, need_q(c)));
        const auto v = is_irreducible_principal_series(chars);
        json j;
        j["irreducible"] = v.irreducible;
        j["tame_criterion"] = v.tame_criterion;
        return j;
    }
    const auto d = parse_datum(need(p, "datum"), *c.F, need_q(c));
    json j;
    if (op == "validate") {
        j["valid"] = validate(d);
        j["delta"] = delta(d);
        return j;
    }
    if (op == "delta") {
        j["delta"] = delta(d);
        return j;
    }
    if (op == "param-pair") return pair_json(param_pair(IrreducibleRep(d)));
    if (op == "constituents") {
        const auto cons = constituents(d);
        j["delta"] = delta(d);
        j["count"] = cons.elements.size();
        j["constituents"] = json::array();
        for (const auto& e : cons.elements) j["constituents"].push_back(datum_json(e.datum()));
        j["param_pair"] = pair_json(param_pair(cons.elements.front()));
        return j;
    }
    throw schema_error("unknown classify op \"" + op + "\"");
}

inline json run_hecke0(const json& p, const Context& c) {
    const auto op = string_or(p, "op", "verify");
    const int n = need_int(p, "n");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    json j;
    if (op == "verify") {
        j["n"] = n;
        j["braid_and_rotation"] = verify_braid_and_rotation(n, *c.F);
        j["shifted_word_commutation"] = verify_shifted_word_commutation(n, *c.F);
        j["rotation_word_power"] = json::array();
        for (int i = 1; i < n; ++i) j["rotation_word_power"].push_back(verify_rotation_word_power(n, i, *c.F));
        return j;
    }
    if (op == "derive") return derivation_json(derive_rotation_invariance(n, int_or(p, "cap", n * n), *c.F));
    if (op == "multiply") {
        const auto a = word_element(n, parse_word(need(p, "a")), *c.F);
        const auto b = word_element(n, parse_word(need(p, "b")), *c.F);
        j["terms"] = hecke0_json(a * b);
        return j;
    }
    throw schema_error("unknown hecke0 op \"" + op + "\"");
}

inline json run_weights(const json& p, const Context& c) {
    const auto op = string_or(p, "op", "canonical");
    const int q = need_q(c);
    if (op == "enumerate") {
        json arr = json::array();
        for (const auto& V : all_weight_classes(need_int(p, "n"), q)) arr.push_back(weight_json(V));
        return arr;
    }
    if (op == "regular-cover" || op == "central-character") {
        const LeviWeightClass Vbar(need_levi(p, "levi"), need_weight(p, "nu"), q);
        if (op == "regular-cover") return weight_json(regular_cover(Vbar));
        json j;
        j["exponents"] = central_character_exponents(Vbar);
        return j;
    }
    const WeightClass V(need_weight(p, "nu"), q);
    if (op == "canonical") return weight_json(V);
    if (op == "restrict") return levi_weight_json(restrict_to_levi(V, need_levi(p, "levi")));
    if (op == "is-regular") {
        json j;
        j["regular"] = is_M_regular(V, need_levi(p, "levi"));
        return j;
    }
    if (op == "stabilizer") return json{{"levi", levi_json(stab_levi(V.nu()))}};
    if (op == "partner") return weight_json(weight_partner_for_change(V, need_int(p, "i")));
    throw schema_error("unknown weights op \"" + op + "\"");
}

inline json run_eigen(const json& p, const Context& c) {
    const auto op = string_or(p, "op", "eval-tau");
    const int q = need_q(c);
    const auto pr = parse_pair(need(p, "pair"), *c.F, q);
    json j;
    if (op == "eval-tau") {
        j["value"] = scalar_json(eval_tau(pr, need_coweight(p, "lambda")));
        return j;
    }
    if (op == "eval-T") {
        j["value"] = scalar_json(eval_T(pr, need_coweight(p, "lambda"), WeightClass(need_weight(p, "nu"), q)));
        return j;
    }
    if (op == "factors-through") {
        j["factors"] = factors_through(pr, need_levi(p, "levi"));
        return j;
    }
    if (op == "supersingular") {
        j["supersingular"] = is_supersingular(pr);
        return j;
    }
    if (op == "twist") return pair_json(twist(pr, parse_character(need(p, "eta"), *c.F, q)));
    if (op == "change-of-weight") {
        j["applicable"] = change_of_weight_applicable(WeightClass(need_weight(p, "nu"), q), need_int(p, "i"), pr);
        return j;
    }
    throw schema_error("unknown eigen op \"" + op + "\"");
}

struct VerifyOutcome {
    json report;
    bool pass;
};

inline VerifyOutcome run_verify(const json& p, const Context& c) {
    const int max_n = int_or(p, "max_n", 3);
    const int max_q = int_or(p, "max_q", 3);
    if (max_n < 2 || max_q < 2) throw std::invalid_argument("max_n and max_q must be at least 2");
    json gates = json::array();
    bool pass = true;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        gates.push_back(json{{"name", name}, {"pass", ok}, {"detail", detail}});
        pass = pass && ok;
    };
    for (const auto& g : oracle::run_gates(max_n, max_q)) add(g.name, g.pass, g.detail);
    for (int n = 2; n <= max_n; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        add("braid and rotation" + tag, verify_braid_and_rotation(n, *c.F), "");
        add("shifted word commutation" + tag, verify_shifted_word_commutation(n, *c.F), "");
        for (int i = 1; i < n; ++i) add("rotation word power" + tag + " i=" + std::to_string(i), verify_rotation_word_power(n, i, *c.F), "");
        if (n <= 4) {
            const auto r = derive_rotation_invariance(n, n * n, *c.F);
            add("rotation invariance derivation" + tag, r.success, "minimal cap " + std::to_string(r.minimal_sufficient_cap));
        }
    }
    json rep;
    rep["pass"] = pass;
    rep["max_n"] = max_n;
    rep["max_q"] = max_q;
    rep["field"] = field_json(*c.F);
    rep["gates"] = std::move(gates);
    return {rep, pass};
}

inline int emit_error(std::ostream& out, const std::string& kind, const std::string& message, int code) {
    json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    out << j.dump(2) << "\n";
    return code;
}

inline JobSpec parse_job(const json& j) {
    if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) throw schema_error("job must be {\"command\": ..., \"params\": {...}}");
    JobSpec job;
    job.command = j["command"].get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw schema_error("params must be an object");
        job.params = j["params"];
    }
    if (j.contains("scalar_field")) job.field = parse_field_json(j["scalar_field"]);
    return job;
}

inline int run(const JobSpec& job, std::ostream& out) {
    try {
        if (std::find(commands().begin(), commands().end(), job.command) == commands().end())
            throw schema_error("unknown command \"" + job.command + "\"");
        const auto c = make_context(job);
        const auto& p = job.params;
        json result;
        if (job.command == "satake") result = run_satake(p, c);
        else if (job.command == "classify") result = run_classify(p, c);
        else if (job.command == "hecke0") result = run_hecke0(p, c);
        else if (job.command == "weights") result = run_weights(p, c);
        else if (job.command == "eigen") result = run_eigen(p, c);
        else if (job.command == "lattice") {
            const auto L = submodule_lattice(parse_datum(need(p, "datum"), *c.F, need_q(c)));
            if (bool_or(p, "dot", false)) {
                out << export_lattice_dot(L);
                return kExitOk;
            }
            result = lattice_json(L);
        } else {
            auto v = run_verify(p, c);
            out << v.report.dump(2) << "\n";
            return v.pass ? kExitOk : kExitDomain;
        }
        out << result.dump(2) << "\n";
        return kExitOk;
    } catch (const schema_error& e) {
        return emit_error(out, "schema", e.what(), kExitSchema);
    } catch (const json::exception& e) {
        return emit_error(out, "schema", e.what(), kExitSchema);
    } catch (const std::exception& e) {
        return emit_error(out, "domain", e.what(), kExitDomain);
    }
}

}  // namespace modp::cli
