// quadlat: command-line front end for quadratic quasigroups.
//
// Exit status: 0 ok, 1 verification failure, 2 usage error, 3 search budget exhausted.

#include <quadlat/catalog.hpp>
#include <quadlat/io.hpp>
#include <quadlat/morphism_engine.hpp>
#include <quadlat/verify.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

using namespace quadlat;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t d = 1;
    std::vector<std::int64_t> modulus;

    FieldPtr make() const
    {
        if (modulus.empty())
            return Field::make(p, d);
        return Field::make(p, d, modulus);
    }
};

void add_field_options(CLI::App * cmd, FieldSpec & spec)
{
    cmd->add_option("--p", spec.p, "characteristic (odd prime)")->required();
    cmd->add_option("--d", spec.d, "extension degree")->capture_default_str();
    cmd->add_option("--modulus", spec.modulus, "monic modulus coefficients, constant term first")->delimiter(',');
}

std::string modulus_string(const Field & f)
{
    const auto & m = f.modulus();
    std::string s;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0)
            continue;
        if (! s.empty())
            s += '+';
        if (m[i] != 1 || i == 0)
            s += std::to_string(m[i]);
        if (i >= 1)
            s += 'x';
        if (i >= 2)
            s += '^' + std::to_string(i);
    }
    return s;
}

int cmd_field(const FieldSpec & spec, bool as_json)
{
    const auto f = spec.make();
    auto names = [&](const std::vector<Elem> & xs) {
        std::vector<std::string> out;
        for (auto x : xs)
            out.push_back(f->to_string(x));
        return out;
    };
    const bool list = f->q() <= 100;
    if (as_json) {
        json out = field_json(*f);
        out["q"] = f->q();
        out["modulus_poly"] = modulus_string(*f);
        out["primitive_poly"] = f->to_string(f->primitive());
        out["residue_count"] = f->residues().size();
        if (list) {
            out["residues"] = names(f->residues());
            out["nonresidues"] = names(f->nonresidues());
        }
        std::cout << out.dump() << '\n';
        return exit_ok;
    }
    std::cout << "GF(" << f->q() << ") = F_" << f->p() << "[x]/(" << modulus_string(*f) << ")\n";
    std::cout << "primitive element: " << f->to_string(f->primitive()) << " (index " << f->primitive().idx << ")\n";
    std::cout << "squares: " << f->residues().size() << ", non-squares: " << f->nonresidues().size() << '\n';
    if (list) {
        auto show = [&](const char * label, const std::vector<Elem> & xs) {
            std::cout << label << " {";
            for (std::size_t i = 0; i < xs.size(); ++i)
                std::cout << (i ? ", " : "") << f->to_string(xs[i]);
            std::cout << "}\n";
        };
        show("R_q =", f->residues());
        show("N_q =", f->nonresidues());
    }
    return exit_ok;
}

// ---- sweep ----

struct SweepConfig {
    FieldSpec field;
    std::string filter = "all";
    std::vector<std::string> pairs;
    std::vector<std::string> tasks{"intercalates"};
    std::string format = "jsonl";
    unsigned threads = 0;
    std::uint64_t budget = 20'000'000;
    std::uint32_t oracle_qmax = 13;
    std::string out;
    bool resume = false;
};

struct UnitResult {
    std::vector<json> rows;
    bool exhausted = false;
    bool mismatch = false; ///< search disagreed with a closed-form criterion
};

struct Unit {
    std::string task;
    std::optional<QuadPair> pair;
    std::function<UnitResult()> work;
};

unsigned thread_count(unsigned requested)
{
    if (const char * env = std::getenv("QUADLAT_THREADS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        }
        catch (const std::exception &) {
            throw usage_error("QUADLAT_THREADS must be a positive integer");
        }
    }
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs every unit on a pool and hands results to sink strictly in unit order.
template <class Sink>
void run_ordered(std::vector<Unit> & units, unsigned threads, Sink sink)
{
    std::vector<std::optional<UnitResult>> results(units.size());
    std::exception_ptr error;
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= units.size())
                return;
            UnitResult r;
            std::exception_ptr err;
            try {
                r = units[i].work();
            }
            catch (...) {
                err = std::current_exception();
            }
            std::lock_guard lock(mu);
            if (err && ! error)
                error = err;
            results[i] = std::move(r);
            cv.notify_all();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, std::max<std::size_t>(units.size(), 1)); ++t)
        pool.emplace_back(worker);
    for (std::size_t i = 0; i < units.size(); ++i) {
        UnitResult r;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return results[i].has_value() || error; });
            if (error)
                break;
            r = std::move(*results[i]);
            results[i].reset();
        }
        sink(units[i], r);
    }
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

std::string row_key(const json & row)
{
    std::string key = row.value("task", "") + "|" + std::to_string(row.value("q", 0u));
    if (row.contains("a") && row.contains("b"))
        key += "|" + row["a"].dump() + "," + row["b"].dump();
    else if (row.contains("pair"))
        key += "|" + row["pair"][0].dump() + "," + row["pair"][1].dump();
    return key;
}

std::string unit_key(const Unit & u, std::uint32_t q)
{
    std::string key = u.task + "|" + std::to_string(q);
    if (u.pair)
        key += "|" + std::to_string(u.pair->a.idx) + "," + std::to_string(u.pair->b.idx);
    return key;
}

std::vector<QuadPair> select_pairs(const SweepConfig & cfg, const FieldPtr & f)
{
    std::vector<QuadPair> out;
    if (cfg.filter == "list") {
        if (cfg.pairs.empty())
            throw usage_error("--filter list needs at least one --pair");
        for (const auto & s : cfg.pairs) {
            const auto comma = s.find(',');
            if (comma == std::string::npos)
                throw usage_error("--pair expects a,b");
            out.push_back(quad_pair(f, f->parse(s.substr(0, comma)), f->parse(s.substr(comma + 1))));
        }
        return out;
    }
    for (auto & p : enumerate_valid_pairs(f)) {
        if (cfg.filter == "distinct" && p.a == p.b)
            continue;
        if (cfg.filter == "excluded" && ! in_excluded_set(p))
            continue;
        out.push_back(std::move(p));
    }
    return out;
}

json cycles_row(const QuadPair & pair)
{
    json row{{"q", pair.F().q()}, {"a", pair.a.idx}, {"b", pair.b.idx}, {"task", "cycles"}};
    if (! pair.valid) {
        row["status"] = "invalid_pair";
        return row;
    }
    row["omega"] = omega(pair).cycle_structure().to_string();
    row["omega_swapped"] = omega(pair.swapped()).cycle_structure().to_string();
    row["all_rows_consistent"] = cycle_invariance_check(pair);
    row["status"] = "ok";
    return row;
}

/// Isomorphism classes of valid pairs by the Frobenius-orbit criterion, optionally certified by search.
/// Classes that search merges share a search_class; rows where search and criterion disagree are
/// marked criterion_mismatch.
UnitResult iso_classes(const FieldPtr & f, const SweepConfig & cfg)
{
    const auto pairs = enumerate_valid_pairs(f);
    std::vector<int> cls(pairs.size(), -1);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (cls[i] >= 0)
            continue;
        cls[i] = static_cast<int>(members.size());
        members.push_back({i});
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (cls[j] < 0 && isomorphic_quad(pairs[i], pairs[j])) {
                cls[j] = cls[i];
                members.back().push_back(j);
            }
    }

    UnitResult res;
    bool checked = false;
    std::vector<std::size_t> search_class(members.size());
    std::iota(search_class.begin(), search_class.end(), std::size_t{0});
    std::vector<char> split(members.size(), 0);
    if (f->q() <= cfg.oracle_qmax) {
        try {
            std::vector<LatinSquare> reps;
            for (const auto & m : members)
                reps.push_back(latin_square(pairs[m.front()]));
            for (std::size_t c = 0; c < members.size(); ++c) {
                for (auto j : members[c])
                    if (! brute_force_isomorphism(reps[c], latin_square(pairs[j]), {cfg.budget}))
                        split[c] = 1;
                for (std::size_t e = c + 1; e < members.size(); ++e)
                    if (search_class[e] == e && brute_force_isomorphism(reps[c], reps[e], {cfg.budget}))
                        search_class[e] = search_class[c];
            }
            checked = true;
        }
        catch (const budget_exhausted &) {
            res.exhausted = true;
        }
    }
    auto merged = [&](std::size_t c) {
        return std::count(search_class.begin(), search_class.end(), search_class[c]) > 1;
    };

    // isotopy classes: isomorphism classes, with every (c,c) class merged into one
    int linear_class = -1, next_iso = 0;
    for (std::size_t c = 0; c < members.size(); ++c) {
        const auto & rep = pairs[members[c].front()];
        int iso_cls;
        if (rep.a == rep.b) {
            if (linear_class < 0)
                linear_class = next_iso++;
            iso_cls = linear_class;
        }
        else
            iso_cls = next_iso++;
        json list = json::array();
        for (auto j : members[c])
            list.push_back(pair_json(pairs[j]));
        res.rows.push_back({{"q", f->q()},
                            {"task", "iso-classes"},
                            {"class", c},
                            {"size", members[c].size()},
                            {"pairs", list},
                            {"isotopy_class", iso_cls},
                            {"oracle_checked", checked},
                            {"search_class", checked ? json(search_class[c]) : json()},
                            {"status", res.exhausted ? "budget_exhausted" : "ok"}});
        if (checked && (split[c] || merged(c))) {
            res.rows.back()["status"] = "criterion_mismatch";
            res.mismatch = true;
        }
    }
    return res;
}

std::string csv_header(const std::string & task)
{
    std::vector<std::string> cols;
    if (task == "intercalates")
        cols = analysis_csv_header();
    else if (task == "groups")
        cols = group_csv_header();
    else if (task == "cycles")
        cols = {"q", "a", "b", "omega", "omega_swapped", "all_rows_consistent"};
    else
        cols = {"q", "class", "size", "pairs", "isotopy_class", "oracle_checked", "search_class"};
    cols.push_back("status");
    std::string s;
    for (std::size_t i = 0; i < cols.size(); ++i)
        s += (i ? "," : "") + cols[i];
    return s;
}

std::string csv_line(const json & row)
{
    const auto task = row.at("task").get<std::string>();
    const auto status = row.value("status", "ok");
    auto field = [&](const char * k) { return row.contains(k) ? quadlat::detail::csv_field(row.at(k)) : std::string(); };
    std::string s;
    if (task == "cycles")
        s = field("q") + "," + field("a") + "," + field("b") + "," + field("omega") + "," + field("omega_swapped") + "," +
            field("all_rows_consistent");
    else if (task == "iso-classes") {
        std::string pairs;
        for (const auto & p : row.at("pairs"))
            pairs += (pairs.empty() ? "" : ";") + p[0].dump() + ":" + p[1].dump();
        s = field("q") + "," + field("class") + "," + field("size") + "," + pairs + "," + field("isotopy_class") + "," + field("oracle_checked") + "," +
            field("search_class");
    }
    else
        s = row.at("csv").get<std::string>();
    return s + "," + status;
}

int cmd_sweep(const SweepConfig & cfg)
{
    static const std::set<std::string> known{"intercalates", "cycles", "groups", "iso-classes"};
    if (cfg.tasks.empty())
        throw usage_error("at least one task is required");
    for (const auto & t : cfg.tasks)
        if (! known.contains(t))
            throw usage_error("unknown task '" + t + "'");
    if (cfg.format != "jsonl" && cfg.format != "csv")
        throw usage_error("format must be jsonl or csv");
    if (cfg.format == "csv" && cfg.tasks.size() != 1)
        throw usage_error("csv output takes exactly one task");
    if (cfg.budget == 0)
        throw usage_error("budget must be positive");
    if (cfg.resume && (cfg.out.empty() || cfg.format != "jsonl"))
        throw usage_error("--resume needs --out and jsonl output");
    if (cfg.filter != "all" && cfg.filter != "distinct" && cfg.filter != "excluded" && cfg.filter != "list")
        throw usage_error("filter must be all, distinct, excluded or list");

    const auto f = cfg.field.make();
    const auto q = f->q();
    const auto pairs = select_pairs(cfg, f);

    std::set<std::string> done;
    if (cfg.resume && std::filesystem::exists(cfg.out)) {
        std::string text;
        {
            std::ifstream prior(cfg.out, std::ios::binary);
            text.assign(std::istreambuf_iterator<char>(prior), {});
        }
        // an interrupted run can leave a partial last line; drop it before appending
        const auto complete = text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1;
        if (complete != text.size())
            std::filesystem::resize_file(cfg.out, complete);
        std::istringstream lines(text.substr(0, complete));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty())
                continue;
            const auto row = json::parse(line, nullptr, false);
            if (row.is_discarded())
                throw usage_error("cannot resume: " + cfg.out + " has a malformed row");
            done.insert(row_key(row));
        }
    }

    std::vector<Unit> units;
    for (const auto & task : cfg.tasks) {
        if (task == "iso-classes") {
            units.push_back({task, std::nullopt, [f, &cfg] { return iso_classes(f, cfg); }});
            continue;
        }
        for (const auto & pair : pairs) {
            Unit u{task, pair, {}};
            if (task == "intercalates")
                u.work = [pair] {
                    const auto row = analyse_pair(pair);
                    auto j = to_json(row);
                    j["task"] = "intercalates";
                    j["csv"] = to_csv(row);
                    j["status"] = pair.valid ? "ok" : "invalid_pair";
                    return UnitResult{{j}, false};
                };
            else if (task == "cycles")
                u.work = [pair] { return UnitResult{{cycles_row(pair)}, false}; };
            else
                u.work = [pair, &cfg] {
                    json j{{"q", pair.F().q()}, {"pair", pair_json(pair)}, {"task", "groups"}};
                    if (! pair.valid) {
                        j["status"] = "invalid_pair";
                        j["csv"] = std::to_string(pair.F().q()) + "," + std::to_string(pair.a.idx) + "," + std::to_string(pair.b.idx) + ",,,,,,";
                        return UnitResult{{j}, false};
                    }
                    try {
                        const auto rep = group_report(pair, pair.F().q() <= cfg.oracle_qmax, {cfg.budget});
                        j = to_json(rep);
                        j["task"] = "groups";
                        j["csv"] = to_csv(rep);
                        j["status"] = "ok";
                        return UnitResult{{j}, false};
                    }
                    catch (const budget_exhausted & e) {
                        j["status"] = "budget_exhausted";
                        j["nodes"] = e.nodes_visited;
                        j["csv"] = std::to_string(pair.F().q()) + "," + std::to_string(pair.a.idx) + "," + std::to_string(pair.b.idx) + ",,,,,,";
                        return UnitResult{{j}, true};
                    }
                };
            units.push_back(std::move(u));
        }
    }
    if (! done.empty())
        std::erase_if(units, [&](const Unit & u) { return done.contains(unit_key(u, q)); });

    std::ofstream file;
    if (! cfg.out.empty()) {
        file.open(cfg.out, cfg.resume ? std::ios::app : std::ios::trunc);
        if (! file)
            throw usage_error("cannot open " + cfg.out);
    }
    std::ostream & os = cfg.out.empty() ? std::cout : file;
    if (cfg.format == "csv")
        os << csv_header(cfg.tasks.front()) << '\n';

    bool exhausted = false, mismatch = false;
    run_ordered(units, thread_count(cfg.threads), [&](const Unit &, UnitResult & r) {
        exhausted = exhausted || r.exhausted;
        mismatch = mismatch || r.mismatch;
        for (auto & row : r.rows) {
            if (cfg.format == "csv")
                os << csv_line(row) << '\n';
            else {
                row.erase("csv");
                os << row.dump() << '\n';
            }
        }
        os.flush();
    });
    if (mismatch)
        std::cerr << "warning: search disagrees with the isomorphism criterion (rows marked criterion_mismatch)\n";
    return mismatch ? exit_failure : exhausted ? exit_budget : exit_ok;
}

// ---- verify ----

int cmd_verify(const std::vector<std::string> & theorems, const VerifyOptions & opt)
{
    if (opt.qmax > 49)
        throw usage_error("qmax is limited to 49");
    if (opt.budget == 0)
        throw usage_error("budget must be positive");
    std::vector<std::pair<std::string, VerifySuite>> chosen;
    for (const auto & [id, suite] : verify_suites())
        if (theorems.empty() || std::find(theorems.begin(), theorems.end(), id) != theorems.end())
            chosen.emplace_back(id, suite);
    for (const auto & t : theorems)
        if (std::none_of(verify_suites().begin(), verify_suites().end(), [&](const auto & s) { return s.first == t; }))
            throw usage_error("unknown theorem id '" + t + "'");

    std::cout << json{{"seed", opt.seed}, {"qmin", opt.qmin}, {"qmax", opt.qmax}, {"budget", opt.budget}}.dump() << '\n';
    bool failed = false, skipped = false;
    for (const auto & [id, suite] : chosen) {
        const auto rep = suite(opt);
        failed = failed || ! rep.ok();
        skipped = skipped || rep.skipped > 0;
        std::cout << to_json(rep).dump() << '\n';
    }
    return failed ? exit_failure : skipped ? exit_budget : exit_ok;
}

// ---- examples ----

json map_summary(const CyclotomicMap & m)
{
    const auto & f = *m.field();
    std::vector<std::string> coeffs;
    for (auto c : m.coeffs())
        coeffs.push_back(f.to_string(c));
    return {{"descriptor", cyclotomic_json(m)},
            {"kappa", f.to_string(m.kappa())},
            {"coeffs", coeffs},
            {"orthomorphism", is_orthomorphism(m)},
            {"least_index", least_index(m)}};
}

json iso_pair_report(const std::pair<CyclotomicMap, CyclotomicMap> & maps, std::uint64_t budget)
{
    const auto & [m1, m2] = maps;
    json out{{"field", field_json(*m1.field())}, {"maps", json::array({map_summary(m1), map_summary(m2)})}};
    const auto l1 = quasigroup_from_orthomorphism(m1), l2 = quasigroup_from_orthomorphism(m2);
    out["intercalates"] = json::array({count_intercalates(l1), count_intercalates(l2)});
    out["invariants_agree"] = isotopism_invariants_agree(l1, l2);
    const auto iso = brute_force_isotopism(l1, l2, {budget}, false);
    out["isotopism"] = iso ? isotopism_json(*iso) : json(nullptr);
    const auto ism = brute_force_isomorphism(l1, l2, {budget});
    out["isomorphism"] = ism ? json(std::vector<std::uint32_t>(ism->images().begin(), ism->images().end())) : json(nullptr);
    out["isotopic"] = iso.has_value();
    out["isomorphic"] = ism.has_value();
    return out;
}

int cmd_example(const std::string & name, std::uint64_t budget)
{
    json out{{"example", name}};
    if (name == "f9-pair")
        out.update(iso_pair_report(catalog::f9_pair(), budget));
    else if (name == "f25-pair")
        out.update(iso_pair_report(catalog::f25_pair(), budget));
    else if (name == "q7-exceptional") {
        const auto pair = catalog::q7_exceptional();
        const auto aut = aut_group(pair, {budget});
        const auto atp = brute_force_autotopisms(latin_square(pair), {budget});
        out.update({{"field", field_json(pair.F())},
                    {"pair", pair_json(pair)},
                    {"aut_order", big_json(aut.order)},
                    {"aut_label", aut.label},
                    {"atp_order", big_json(atp.order)},
                    {"intercalates", count_intercalates(latin_square(pair))}});
    }
    else if (name == "q7-index6") {
        const auto m = catalog::q7_index6();
        const auto sq = quasigroup_from_orthomorphism(m);
        out.update({{"field", field_json(*m.field())},
                    {"map", map_summary(m)},
                    {"aut_order", big_json(brute_force_automorphisms(sq, {budget}).order)},
                    {"atp_order", big_json(brute_force_autotopisms(sq, {budget}).order)}});
    }
    else
        throw usage_error("unknown example '" + name + "'");
    std::cout << out.dump(2) << '\n';
    return exit_ok;
}

int cmd_cyclotomic(const FieldSpec & spec, std::uint32_t index, const std::string & kappa, const std::vector<std::string> & coeffs,
                   bool with_square)
{
    const auto f = spec.make();
    std::vector<Elem> c;
    for (const auto & s : coeffs)
        c.push_back(f->parse(s));
    const auto m = make_cyclotomic(f, index, kappa.empty() ? std::nullopt : std::optional<Elem>(f->parse(kappa)), std::move(c));
    json out = map_summary(m);
    out["field"] = field_json(*f);
    out["permutation"] = m.is_permutation();
    if (with_square && is_orthomorphism(m))
        out["square"] = square_json(m);
    std::cout << out.dump() << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Quadratic quasigroups: fields, intercalates, groups and verification"};
    app.require_subcommand(1);

    FieldSpec field_spec;
    bool field_json_out = false;
    auto * field_cmd = app.add_subcommand("field", "describe a finite field");
    add_field_options(field_cmd, field_spec);
    field_cmd->add_flag("--json", field_json_out, "machine-readable output");

    SweepConfig sweep;
    auto * sweep_cmd = app.add_subcommand("sweep", "per-pair reports over a field");
    add_field_options(sweep_cmd, sweep.field);
    sweep_cmd->add_option("--filter", sweep.filter, "all | distinct | excluded | list")->capture_default_str();
    sweep_cmd->add_option("--pair", sweep.pairs, "explicit pair a,b for --filter list (element strings)");
    sweep_cmd->add_option("--tasks", sweep.tasks, "intercalates,cycles,groups,iso-classes")->delimiter(',')->capture_default_str();
    sweep_cmd->add_option("--format", sweep.format, "jsonl | csv")->capture_default_str();
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0: all cores; QUADLAT_THREADS overrides)");
    sweep_cmd->add_option("--budget", sweep.budget, "node limit per search")->capture_default_str();
    sweep_cmd->add_option("--oracle-qmax", sweep.oracle_qmax, "cross-check groups and classes by search up to this q")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
    sweep_cmd->add_flag("--resume", sweep.resume, "append to --out, skipping rows already there");

    std::vector<std::string> theorems;
    VerifyOptions vopt;
    auto * verify_cmd = app.add_subcommand("verify", "cross-check the structural results");
    verify_cmd->add_option("--theorems", theorems, "ids to run (default all)")->delimiter(',');
    verify_cmd->add_option("--qmin", vopt.qmin)->capture_default_str();
    verify_cmd->add_option("--qmax", vopt.qmax)->capture_default_str();
    verify_cmd->add_option("--budget", vopt.budget, "node limit per search")->capture_default_str();
    verify_cmd->add_option("--seed", vopt.seed)->capture_default_str();
    verify_cmd->add_option("--samples", vopt.weil_samples, "random polynomials per field")->capture_default_str();

    std::string example_name;
    std::uint64_t example_budget = 200'000'000;
    auto * example_cmd = app.add_subcommand("example", "reproduce a named example");
    example_cmd->add_option("name", example_name, "f9-pair | f25-pair | q7-exceptional | q7-index6")->required();
    example_cmd->add_option("--budget", example_budget)->capture_default_str();

    FieldSpec cyc_spec;
    std::uint32_t cyc_index = 2;
    std::string cyc_kappa;
    std::vector<std::string> cyc_coeffs;
    bool cyc_square = false;
    auto * cyc_cmd = app.add_subcommand("cyclotomic", "orthomorphism and least-index report for a cyclotomic map");
    add_field_options(cyc_cmd, cyc_spec);
    cyc_cmd->add_option("--index", cyc_index)->required();
    cyc_cmd->add_option("--kappa", cyc_kappa, "primitive element (default: the field's)");
    cyc_cmd->add_option("--coeffs", cyc_coeffs, "coefficients a_0..a_{n-1}")->delimiter(',')->required();
    cyc_cmd->add_flag("--square", cyc_square, "include the generated square");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const auto rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*field_cmd)
            return cmd_field(field_spec, field_json_out);
        if (*sweep_cmd)
            return cmd_sweep(sweep);
        if (*verify_cmd)
            return cmd_verify(theorems, vopt);
        if (*example_cmd)
            return cmd_example(example_name, example_budget);
        if (*cyc_cmd)
            return cmd_cyclotomic(cyc_spec, cyc_index, cyc_kappa, cyc_coeffs, cyc_square);
    }
    catch (const budget_exhausted & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const usage_error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::out_of_range & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::logic_error & e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
