#ifndef QUADLAT_IO_HPP
#define QUADLAT_IO_HPP

// JSON and CSV records for fields, squares, analysis rows, group reports and isotopism witnesses.

#include <quadlat/gf_core.hpp>
#include <quadlat/latin_square.hpp>
#include <quadlat/morphism_engine.hpp>
#include <quadlat/quad_quasigroup.hpp>
#include <quadlat/square_analysis.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace quadlat {

using json = nlohmann::ordered_json;

/// {p, d, modulus, primitive}. The modulus is reduced to [0,p), constant term first.
inline json field_json(const Field & f)
{
    return {{"p", f.p()}, {"d", f.d()}, {"modulus", f.modulus()}, {"primitive", f.primitive().idx}};
}

inline FieldPtr field_from_json(const json & j)
{
    std::optional<std::vector<std::int64_t>> modulus;
    if (j.contains("modulus") && ! j.at("modulus").is_null())
        modulus = j.at("modulus").get<std::vector<std::int64_t>>();
    return Field::make(j.at("p").get<std::uint32_t>(), j.at("d").get<std::uint32_t>(), std::move(modulus));
}

inline json pair_json(const QuadPair & pair) { return json::array({pair.a.idx, pair.b.idx}); }

inline json cyclotomic_json(const CyclotomicMap & m)
{
    json coeffs = json::array();
    for (auto c : m.coeffs())
        coeffs.push_back(c.idx);
    return {{"index", m.index()}, {"kappa", m.kappa().idx}, {"coeffs", coeffs}};
}

namespace detail {
    inline json square_record(const LatinSquare & sq, const Field & f, const char * key, json descriptor)
    {
        json out{{"q", sq.order()}, {"field", field_json(f)}};
        out[key] = std::move(descriptor);
        out["rows"] = sq.rows();
        return out;
    }
} // namespace detail

inline json square_json(const QuadPair & pair) { return detail::square_record(latin_square(pair), pair.F(), "pair", pair_json(pair)); }

inline json square_json(const CyclotomicMap & m)
{
    return detail::square_record(quasigroup_from_orthomorphism(m), *m.field(), "cyclotomic", cyclotomic_json(m));
}

/// Rebuilds the square from its descriptor and checks it against the stored rows.
inline LatinSquare square_from_json(const json & j)
{
    const auto f = field_from_json(j.at("field"));
    LatinSquare sq;
    if (j.contains("pair")) {
        const auto ab = j.at("pair").get<std::vector<std::uint32_t>>();
        if (ab.size() != 2)
            throw std::invalid_argument("pair descriptor needs two indices");
        sq = latin_square(quad_pair(f, Elem{ab[0]}, Elem{ab[1]}));
    }
    else if (j.contains("cyclotomic")) {
        const auto & c = j.at("cyclotomic");
        std::vector<Elem> coeffs;
        for (auto v : c.at("coeffs").get<std::vector<std::uint32_t>>())
            coeffs.push_back(Elem{v});
        sq = quasigroup_from_orthomorphism(make_cyclotomic(f, c.at("index").get<std::uint32_t>(), Elem{c.at("kappa").get<std::uint32_t>()},
                                                           std::move(coeffs)));
    }
    else {
        sq = LatinSquare::from_rows(j.at("rows").get<std::vector<std::vector<std::uint32_t>>>());
    }
    if (j.contains("rows") && sq.rows() != j.at("rows").get<std::vector<std::vector<std::uint32_t>>>())
        throw std::invalid_argument("stored rows do not match the descriptor");
    return sq;
}

inline constexpr std::size_t max_csv_order = 100;

inline std::string square_csv(const LatinSquare & sq)
{
    if (sq.order() > max_csv_order)
        throw std::invalid_argument("CSV export is limited to order " + std::to_string(max_csv_order));
    std::ostringstream os;
    for (std::size_t r = 0; r < sq.order(); ++r) {
        for (std::size_t c = 0; c < sq.order(); ++c)
            os << (c ? "," : "") << sq.at(r, c);
        os << '\n';
    }
    return os.str();
}

inline json big_json(const BigInt & v)
{
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    return v.str();
}

inline json isotopism_json(const IsotopismTriple & t)
{
    auto arr = [](const Permutation & p) { return std::vector<std::uint32_t>(p.images().begin(), p.images().end()); };
    return {{"alpha", arr(t.alpha)}, {"beta", arr(t.beta)}, {"gamma", arr(t.gamma)}};
}

inline IsotopismTriple isotopism_from_json(const json & j)
{
    return {Permutation(j.at("alpha").get<std::vector<std::uint32_t>>()), Permutation(j.at("beta").get<std::vector<std::uint32_t>>()),
            Permutation(j.at("gamma").get<std::vector<std::uint32_t>>())};
}

/// Intercalate and transposition data for one pair. Fields that do not apply are empty.
struct AnalysisRow {
    std::uint32_t q = 0;
    std::uint32_t a = 0, b = 0;
    bool valid = false;
    bool excluded_set_member = false;
    std::optional<bool> n2_condition;
    std::optional<IntercalatePrediction> predicted;
    std::optional<std::uint64_t> n_brute, n_rows, m, m_swapped, type_one, type_two;
    std::vector<std::string> cycle_structures;
};

inline AnalysisRow analyse_pair(const QuadPair & pair)
{
    AnalysisRow row;
    row.q = pair.F().q();
    row.a = pair.a.idx;
    row.b = pair.b.idx;
    row.valid = pair.valid;
    row.excluded_set_member = in_excluded_set(pair);
    if (! pair.valid)
        return row;
    if (! row.excluded_set_member)
        row.n2_condition = n2_condition(pair);
    row.predicted = predicted_intercalates(pair);
    const auto sq = latin_square(pair);
    row.n_brute = count_intercalates(sq);
    row.cycle_structures.push_back(row_permutation(sq, 0, 1).cycle_structure().to_string());
    if (pair.a != pair.b) {
        row.n_rows = intercalates_via_rows(pair);
        row.m = transposition_count(pair);
        row.m_swapped = transposition_count(pair.swapped());
        row.type_one = type_one_count(pair);
        row.type_two = type_two_count(pair);
        const auto other = row_permutation(latin_square(pair.swapped()), 0, 1).cycle_structure().to_string();
        if (other != row.cycle_structures.front())
            row.cycle_structures.push_back(other);
    }
    return row;
}

namespace detail {
    template <class T>
    json opt(const std::optional<T> & v)
    {
        return v ? json(*v) : json(nullptr);
    }

    inline json prediction_json(const std::optional<IntercalatePrediction> & p)
    {
        if (! p)
            return nullptr;
        json out{{"kind", p->kind_name()}};
        if (p->kind == IntercalatePrediction::Kind::Exact)
            out["value"] = p->exact;
        if (p->kind == IntercalatePrediction::Kind::Bounded) {
            out["lo"] = p->bounds.lo;
            out["hi"] = p->bounds.hi;
        }
        return out;
    }

    inline std::string csv_field(const json & v)
    {
        if (v.is_null())
            return "";
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    }
} // namespace detail

inline json to_json(const AnalysisRow & r)
{
    return {{"q", r.q},
            {"a", r.a},
            {"b", r.b},
            {"valid", r.valid},
            {"excluded_set_member", r.excluded_set_member},
            {"n2_condition", detail::opt(r.n2_condition)},
            {"predicted", detail::prediction_json(r.predicted)},
            {"N_brute", detail::opt(r.n_brute)},
            {"N_rows", detail::opt(r.n_rows)},
            {"M", detail::opt(r.m)},
            {"M'", detail::opt(r.m_swapped)},
            {"type_one", detail::opt(r.type_one)},
            {"type_two", detail::opt(r.type_two)},
            {"cycle_structures", r.cycle_structures}};
}

inline const std::vector<std::string> & analysis_csv_header()
{
    static const std::vector<std::string> h{"q",     "a", "b",  "valid",    "excluded_set_member", "n2_condition", "predicted",
                                            "N_brute", "N_rows", "M", "M'", "type_one", "type_two", "cycle_structures"};
    return h;
}

/// One CSV line in analysis_csv_header() order. Predictions render as kind[:value|:lo..hi].
inline std::string to_csv(const AnalysisRow & r)
{
    std::string pred;
    if (r.predicted) {
        pred = r.predicted->kind_name();
        if (r.predicted->kind == IntercalatePrediction::Kind::Exact)
            pred += ":" + std::to_string(r.predicted->exact);
        else if (r.predicted->kind == IntercalatePrediction::Kind::Bounded)
            pred += ":" + std::to_string(r.predicted->bounds.lo) + ".." + std::to_string(r.predicted->bounds.hi);
    }
    std::string cs;
    for (std::size_t i = 0; i < r.cycle_structures.size(); ++i)
        cs += (i ? ";" : "") + r.cycle_structures[i];
    const auto j = to_json(r);
    std::ostringstream os;
    os << r.q << ',' << r.a << ',' << r.b << ',' << (r.valid ? "true" : "false") << ',' << (r.excluded_set_member ? "true" : "false")
       << ',' << detail::csv_field(j["n2_condition"]) << ',' << pred;
    for (const char * k : {"N_brute", "N_rows", "M", "M'", "type_one", "type_two"})
        os << ',' << detail::csv_field(j[k]);
    os << ",\"" << cs << '"';
    return os.str();
}

/// Aut and Atp summary for one pair.
struct GroupReport {
    std::uint32_t q = 0;
    std::uint32_t a = 0, b = 0;
    BigInt aut_order = 0;
    std::string aut_label;
    BigInt atp_order = 0;
    bool diagonal = false;
    BigInt bound = 0;
    bool oracle_checked = false;
};

/// With check_oracle, the constructed orders are compared against exhaustive search
/// (aut always, atp for q <= 13); a disagreement throws.
inline GroupReport group_report(const QuadPair & pair, bool check_oracle, SearchLimits limits = {})
{
    GroupReport r;
    r.q = pair.F().q();
    r.a = pair.a.idx;
    r.b = pair.b.idx;
    const auto aut = aut_group(pair, limits);
    const auto atp = atp_group(pair, limits);
    r.aut_order = aut.order;
    r.aut_label = aut.label;
    r.atp_order = atp.order;
    r.diagonal = pair.a != pair.b;
    r.bound = atp_upper_bound(r.q);
    if (check_oracle) {
        const auto sq = latin_square(pair);
        if (brute_force_automorphisms(sq, limits).order != aut.order)
            throw std::logic_error("constructed automorphism group disagrees with search");
        if (r.q <= 13 && brute_force_autotopisms(sq, limits).order != atp.order)
            throw std::logic_error("constructed autotopism group disagrees with search");
        r.oracle_checked = true;
    }
    return r;
}

inline json to_json(const GroupReport & r)
{
    return {{"q", r.q},
            {"pair", json::array({r.a, r.b})},
            {"aut_order", big_json(r.aut_order)},
            {"aut_label", r.aut_label},
            {"atp_order", big_json(r.atp_order)},
            {"diagonal", r.diagonal},
            {"bound", big_json(r.bound)},
            {"oracle_checked", r.oracle_checked}};
}

inline const std::vector<std::string> & group_csv_header()
{
    static const std::vector<std::string> h{"q", "a", "b", "aut_order", "aut_label", "atp_order", "diagonal", "bound", "oracle_checked"};
    return h;
}

inline std::string to_csv(const GroupReport & r)
{
    std::ostringstream os;
    os << r.q << ',' << r.a << ',' << r.b << ',' << r.aut_order << ',' << r.aut_label << ',' << r.atp_order << ','
       << (r.diagonal ? "true" : "false") << ',' << r.bound << ',' << (r.oracle_checked ? "true" : "false");
    return os.str();
}

} // namespace quadlat

#endif
