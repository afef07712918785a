#include "locmem/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace locmem::cli {

using nlohmann::json;

namespace {

// --------------------------------------------------------- json encoders

json scalars_json(const ScalarVector& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

json matrix_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

json indices_json(const IndexSet& s) {
    json a = json::array();
    for (auto i : s) a.push_back(i + 1);
    return a;
}

json cramer_json(const CramerWitness& w) {
    json lambdas = json::array();
    for (const auto& l : w.lambdas)
        lambdas.push_back({{"num", l.numerator().to_string()}, {"den", l.denominator().to_string()}});
    return {{"index_set", indices_json(w.index_set)}, {"lambdas", lambdas}, {"m", w.m.to_string()}};
}

json bounds_json(const WitnessBoundsReport& b) {
    json lambdas = json::array();
    auto deg = [](const std::optional<unsigned>& d) { return d ? json(*d) : json(nullptr); };
    for (const auto& l : b.lambdas)
        lambdas.push_back({{"zero", l.zero},
                           {"numerator_degree", deg(l.numerator_degree)},
                           {"denominator_degree", deg(l.denominator_degree)},
                           {"homogeneous", l.homogeneous},
                           {"coprime", l.coprime},
                           {"ok", l.ok}});
    json sets = json::array();
    for (const auto& s : b.nonzero_minor_sets) sets.push_back(indices_json(s));
    return {{"lambdas", lambdas},
            {"degrees_ok", b.degrees_ok},
            {"nonzero_minor_sets", sets},
            {"m_divides_all_minors", b.m_divides_all_minors},
            {"m_degree", b.m_degree},
            {"m_degree_below_d", b.m_degree_below_d}};
}

json failure_json(const LocalDecision& dec) {
    if (!dec.failure) return nullptr;
    const auto& f = *dec.failure;
    json j;
    j["method"] = dec.method == LocalMethod::closure_radical ? "closure" : "points";
    j["stratum"] = f.stratum;
    if (f.minor) {
        j["rows"] = indices_json(f.rows);
        j["cols"] = indices_json(f.cols);
        j["minor"] = f.minor->to_string();
    }
    if (f.point) j["point"] = scalars_json(*f.point);
    return j;
}

json idempotent_json(const Rank1Idempotent& e) {
    return {{"u", scalars_json(e.u)}, {"v", scalars_json(e.v)}, {"matrix", matrix_json(e.matrix())}};
}

// --------------------------------------------------------- json decoders

ScalarVector scalars_from(const json& a, Field field) {
    ScalarVector out;
    for (const auto& s : a) out.emplace_back(field, mpq_class(s.get<std::string>()));
    return out;
}

ScalarMatrix matrix_from(const json& rows, Field field, std::size_t n) {
    ScalarMatrix m(field, n, n);
    if (rows.size() != n) throw InputError("reported matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw InputError("reported matrix has wrong size");
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, mpq_class(rows[i][j].get<std::string>()));
    }
    return m;
}

IndexSet indices_from(const json& a) {
    IndexSet out;
    for (const auto& i : a) {
        auto v = i.get<long>();
        if (v < 1) throw InputError("index out of range in report");
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

// ------------------------------------------------------------- decisions

MatrixSubspace matrix_space_of(const InstanceFile& inst) {
    if (inst.kind == InstanceKind::matrix_subspace) return inst.matrix_subspace();
    return perp(flat(inst.linear_subspace()));
}

// The space whose complement `perp` reports: flat(V) or W itself.
MatrixSubspace perp_source(const InstanceFile& inst) {
    if (inst.kind == InstanceKind::matrix_subspace) return inst.matrix_subspace();
    return flat(inst.linear_subspace());
}

LocalDecision local_decision(const LinearSubspace& v, const Options& opts) {
    if (opts.method == "closure") return ylocal_closure(v);
    if (opts.method == "points") return ylocal_points(v, opts.budget);
    throw InputError("unknown method '" + opts.method + "' (expected closure or points)");
}

R1FreeDecision r1free_decision(const MatrixSubspace& w, const Options& opts) {
    if (opts.method == "closure") return is_r1_free_closure(w);
    if (opts.method == "points") return is_r1_free_points(w, opts.budget);
    throw InputError("unknown method '" + opts.method + "' (expected closure or points)");
}

std::size_t reported_d(const InstanceFile& inst) {
    if (inst.kind == InstanceKind::linear_subspace) return inst.vectors.size();
    return inst.n * inst.n - inst.matrices.size();
}

json base_report(const std::string& command, const InstanceFile& inst) {
    const std::string text = print_instance(inst);
    json r;
    r["command"] = command;
    r["outcome"] = false;
    r["witness"] = nullptr;
    r["failure_witness"] = nullptr;
    r["field"] = inst.field.name();
    r["n"] = inst.n;
    r["d"] = reported_d(inst);
    r["elapsed_ms"] = 0;
    r["instance"] = text;
    r["instance_digest"] = instance_digest(text);
    return r;
}

void run_decision(const Options& opts, const InstanceFile& inst, json& r) {
    const std::string& cmd = opts.command;
    if (cmd == "decide-local") {
        LocalDecision dec = local_decision(inst.linear_subspace(), opts);
        r["outcome"] = dec.holds;
        r["failure_witness"] = failure_json(dec);
    } else if (cmd == "decide-span-f") {
        if (auto alpha = span_over_field(inst.linear_subspace())) {
            r["outcome"] = true;
            r["witness"] = {{"coefficients", scalars_json(*alpha)}};
        }
    } else if (cmd == "decide-span-l" || cmd == "witness-bounds") {
        LinearSubspace v = inst.linear_subspace();
        auto w = span_over_fraction_field(v);
        if (!w) {
            r["failure_witness"] = {{"reason", "y is not in the span over the fraction field"}};
            return;
        }
        r["witness"] = cramer_json(*w);
        if (cmd == "decide-span-l") {
            r["outcome"] = true;
        } else {
            WitnessBoundsReport b = verify_witness_bounds(*w, v);
            r["witness"]["bounds"] = bounds_json(b);
            r["outcome"] = b.passes();
        }
    } else if (cmd == "pencil") {
        LinearSubspace v = inst.linear_subspace();
        auto pencil = pencil_decompose(v);
        json mats = json::array();
        for (const auto& a : pencil) mats.push_back(matrix_json(a));
        json w = {{"pencil", mats}, {"null_vector", nullptr}, {"coefficients", nullptr}};
        if (auto p = common_null_test(pencil)) {
            w["null_vector"] = scalars_json(*p);
            if (!p->back().is_zero()) w["coefficients"] = scalars_json(coefficients_from_null_vector(*p));
            r["outcome"] = true;
        }
        r["witness"] = w;
    } else if (cmd == "r1free") {
        R1FreeDecision dec = r1free_decision(matrix_space_of(inst), opts);
        r["outcome"] = dec.r1_free;
        if (dec.witness) {
            r["failure_witness"] = {{"method", "codim0"}, {"idempotent", idempotent_json(*dec.witness)}};
        } else {
            r["failure_witness"] = failure_json(dec.local);
        }
    } else if (cmd == "idempotent-search") {
        if (auto e = find_rank1_idempotent_bruteforce(matrix_space_of(inst), opts.budget)) {
            r["outcome"] = true;
            r["witness"] = idempotent_json(*e);
        }
    } else if (cmd == "perp") {
        MatrixSubspace p = perp(perp_source(inst));
        json mats = json::array();
        for (const auto& b : p.basis()) mats.push_back(matrix_json(b));
        r["outcome"] = true;
        r["witness"] = {{"basis", mats}, {"instance", print_instance(make_instance(p))}};
    } else if (cmd == "tracezero") {
        MatrixSubspace w = matrix_space_of(inst);
        r["outcome"] = is_subspace_of_tracezero(w);
        for (std::size_t i = 0; i < w.dim(); ++i)
            if (sgn(w.basis()[i].trace()) != 0) {
                r["failure_witness"] = {{"basis_index", i + 1}, {"trace", w.basis()[i].trace().get_str()}};
                break;
            }
    } else {
        throw InputError("command '" + cmd + "' does not take an instance");
    }
}

// --------------------------------------------------------------- verify

struct Check {
    bool ok = true;
    std::string reason;
    void require(bool cond, const std::string& why) {
        if (ok && !cond) {
            ok = false;
            reason = why;
        }
    }
};

void check_local_failure(const json& fw, const LinearSubspace& v, Check& c) {
    const std::string method = fw.at("method").get<std::string>();
    const std::size_t s = fw.at("stratum").get<std::size_t>();
    if (method == "points") {
        ScalarVector a = scalars_from(fw.at("point"), v.field());
        ScalarMatrix q = evaluate_matrix(v.basis_matrix(), a);
        ScalarMatrix cy = evaluate_matrix(v.augmented(coordinate_vector(v.field(), v.n())), a);
        c.require(rank(cy) > rank(q), "no rank jump at the reported point");
        c.require(s == rank(q) + 1, "reported stratum does not match the rank at the point");
        return;
    }
    IndexSet rows = indices_from(fw.at("rows"));
    IndexSet cols = indices_from(fw.at("cols"));
    c.require(rows.size() == s && cols.size() == s, "minor index sets do not match the stratum");
    c.require(!cols.empty() && cols.back() == v.d(), "failing minor does not use the y column");
    if (!c.ok) return;
    Polynomial minor = parse_polynomial(fw.at("minor").get<std::string>(), v.field(), v.n());
    PolyMatrix cy = v.augmented(coordinate_vector(v.field(), v.n()));
    c.require(det(cy.submatrix(rows, cols)) == minor, "reported minor does not match the index sets");
    Ideal minor_ideal(v.field(), v.n());
    if (s <= v.d())
        for (auto& m : minors(v.basis_matrix(), s)) minor_ideal.add(m.value);
    c.require(!radical_membership(minor, minor_ideal), "reported minor lies in the radical of the minor ideal");
}

CramerWitness cramer_from(const json& w, const LinearSubspace& v) {
    CramerWitness cw;
    cw.index_set = indices_from(w.at("index_set"));
    for (const auto& l : w.at("lambdas")) {
        Polynomial num = parse_polynomial(l.at("num").get<std::string>(), v.field(), v.n());
        Polynomial den = parse_polynomial(l.at("den").get<std::string>(), v.field(), v.n());
        RationalFunction r = reduce_fraction(num, den);
        if (!(r.numerator() == num && r.denominator() == den)) throw InputError("reported fraction is not reduced");
        cw.lambdas.push_back(r);
    }
    cw.m = parse_polynomial(w.at("m").get<std::string>(), v.field(), v.n());
    return cw;
}

Check verify_decision(const json& report, const InstanceFile& inst, const Options& opts) {
    Check c;
    const std::string cmd = report.at("command").get<std::string>();
    const bool outcome = report.at("outcome").get<bool>();
    const json& w = report.at("witness");
    const json& fw = report.at("failure_witness");
    Options o = opts;
    o.command = cmd;

    if (cmd == "decide-local") {
        LinearSubspace v = inst.linear_subspace();
        if (!fw.is_null()) {
            c.require(!outcome, "failure witness on a positive outcome");
            check_local_failure(fw, v, c);
        } else {
            o.method = "closure";
            c.require(outcome && ylocal_closure(v).holds, "property does not hold");
        }
    } else if (cmd == "decide-span-f") {
        LinearSubspace v = inst.linear_subspace();
        if (!w.is_null()) {
            ScalarVector alpha = scalars_from(w.at("coefficients"), v.field());
            c.require(alpha.size() == v.d(), "wrong number of coefficients");
            if (c.ok) {
                ScalarMatrix sum(v.field(), v.n(), v.n());
                for (std::size_t i = 0; i < v.d(); ++i) sum = sum + v.coeff_matrices()[i].scaled(alpha[i].value());
                c.require(sum == ScalarMatrix::identity(v.field(), v.n()), "coefficients do not reproduce y");
            }
        } else {
            c.require(!outcome && !span_over_field(v), "y lies in the span over the field");
        }
    } else if (cmd == "decide-span-l" || cmd == "witness-bounds") {
        LinearSubspace v = inst.linear_subspace();
        if (!w.is_null()) {
            CramerWitness cw = cramer_from(w, v);
            c.require(witness_identity_holds(cw, v, coordinate_vector(v.field(), v.n())), "witness identity fails");
            Polynomial m = Polynomial::constant(v.field(), v.n(), 1);
            for (const auto& l : cw.lambdas) m = poly_lcm(m, l.denominator());
            c.require(m == cw.m, "m is not the lcm of the denominators");
            if (c.ok && cmd == "witness-bounds") {
                WitnessBoundsReport b = verify_witness_bounds(cw, v);
                c.require(bounds_json(b) == w.at("bounds"), "bounds report does not match");
                c.require(b.passes() == outcome, "outcome does not match the bounds");
            }
        } else {
            c.require(!outcome && !span_over_fraction_field(v), "y lies in the span over the fraction field");
        }
    } else if (cmd == "pencil") {
        LinearSubspace v = inst.linear_subspace();
        auto pencil = pencil_decompose(v);
        json mats = json::array();
        for (const auto& a : pencil) mats.push_back(matrix_json(a));
        c.require(w.at("pencil") == mats, "pencil does not match the instance");
        if (!w.at("null_vector").is_null()) {
            ScalarVector p = scalars_from(w.at("null_vector"), v.field());
            bool nonzero = std::any_of(p.begin(), p.end(), [](const Scalar& s) { return !s.is_zero(); });
            c.require(nonzero, "null vector is zero");
            for (const auto& a : pencil) {
                auto ap = a.apply(p);
                c.require(std::all_of(ap.begin(), ap.end(), [](const Scalar& s) { return s.is_zero(); }),
                          "null vector is not annihilated by the pencil");
            }
            c.require(outcome, "null vector reported with a negative outcome");
        } else {
            c.require(!outcome && !common_null_test(pencil), "pencil has a common null vector");
        }
    } else if (cmd == "r1free") {
        MatrixSubspace ws = matrix_space_of(inst);
        if (!fw.is_null() && fw.at("method") == "codim0") {
            const json& e = fw.at("idempotent");
            ScalarVector u = scalars_from(e.at("u"), ws.field()), vv = scalars_from(e.at("v"), ws.field());
            Rank1Idempotent idem{u, vv};
            c.require(ws.contains(idem.matrix()), "idempotent not in the subspace");
        } else if (!fw.is_null()) {
            c.require(!outcome, "failure witness on a positive outcome");
            check_local_failure(fw, LinearSubspace::from_matrices(ws.field(), ws.n(), perp(ws).basis()), c);
        } else {
            c.require(outcome && r1free_decision(ws, o).r1_free, "subspace is not r1-free");
        }
    } else if (cmd == "idempotent-search") {
        MatrixSubspace ws = matrix_space_of(inst);
        if (!w.is_null()) {
            ScalarVector u = scalars_from(w.at("u"), ws.field()), vv = scalars_from(w.at("v"), ws.field());
            Scalar vu(ws.field(), 0);
            for (std::size_t i = 0; i < u.size(); ++i) vu = vu + u[i] * vv[i];
            c.require(vu == Scalar(ws.field(), 1), "v^T u != 1");
            c.require(ws.contains(Rank1Idempotent{u, vv}.matrix()), "u v^T is not in the subspace");
        } else {
            c.require(!outcome && !find_rank1_idempotent_bruteforce(ws, opts.budget), "an idempotent exists");
        }
    } else if (cmd == "perp") {
        MatrixSubspace ws = perp_source(inst);
        std::vector<ScalarMatrix> basis;
        for (const auto& m : w.at("basis")) basis.push_back(matrix_from(m, ws.field(), ws.n()));
        MatrixSubspace p(ws.field(), ws.n(), basis);
        c.require(p.dim() + ws.dim() == ws.n() * ws.n(), "dimensions are not complementary");
        for (const auto& a : p.basis())
            for (const auto& b : ws.basis()) c.require(trace_pairing(a, b).is_zero(), "basis not orthogonal");
    } else if (cmd == "tracezero") {
        c.require(is_subspace_of_tracezero(matrix_space_of(inst)) == outcome, "trace-zero outcome does not match");
    } else if (cmd == "example") {
        c.require(outcome, "example report with negative outcome");
    } else {
        c.require(false, "cannot verify command '" + cmd + "'");
    }
    return c;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {"decide-local", "decide-span-f", "decide-span-l", "witness-bounds",
                                                   "pencil",       "r1free",        "idempotent-search",
                                                   "perp",         "tracezero",     "example",
                                                   "verify"};
    return names;
}

std::string instance_digest(const std::string& canonical_text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json decide(const Options& opts, const InstanceFile& inst) {
    auto start = std::chrono::steady_clock::now();
    json r = base_report(opts.command, inst);
    run_decision(opts, inst, r);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    r["elapsed_ms"] = opts.no_timing ? 0 : ms;
    return r;
}

json verify_report(const json& report, const Options& opts) {
    auto start = std::chrono::steady_clock::now();
    for (const char* key : {"command", "outcome", "witness", "failure_witness", "instance"})
        if (!report.contains(key)) throw InputError(std::string("report lacks '") + key + "'");
    InstanceFile inst = parse_instance(report.at("instance").get<std::string>());
    json r = base_report("verify", inst);
    Check c;
    c.require(!report.contains("instance_digest") ||
                  report.at("instance_digest") == instance_digest(print_instance(inst)),
              "instance digest mismatch");
    if (c.ok) c = verify_decision(report, inst, opts);
    r["outcome"] = c.ok;
    r["witness"] = {{"verified_command", report.at("command")}};
    if (!c.ok) r["failure_witness"] = {{"reason", c.reason}};
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    r["elapsed_ms"] = opts.no_timing ? 0 : ms;
    return r;
}

std::string render_text(const json& report) {
    std::ostringstream out;
    for (const char* key : {"command", "field", "n", "d", "outcome", "witness", "failure_witness", "instance_digest",
                            "elapsed_ms"}) {
        if (!report.contains(key)) continue;
        const json& v = report.at(key);
        out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return out.str();
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Exact y-local membership and r1-free subspace decisions", "locmem"};
    app.add_option("command", opts.command, "Subcommand")->required()->check(CLI::IsMember(subcommands()));
    app.add_option("--input", opts.input, "Instance file (or report for verify); stdin when omitted");
    app.add_option("--method", opts.method, "closure or points")->check(CLI::IsMember({"closure", "points"}));
    app.add_flag("--json", opts.json, "Emit the report as one JSON object");
    app.add_option("--budget", opts.budget, "Enumeration budget");
    app.add_option("--n", opts.n, "Ambient dimension (example)");
    app.add_option("--d", opts.d, "Subspace dimension (example)");
    app.add_option("--prime", opts.prime, "Reduce the example modulo this prime");
    app.add_flag("--no-timing", opts.no_timing, "Report elapsed_ms as 0");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        json report;
        if (opts.command == "example") {
            if (!opts.n || !opts.d) throw InputError("example needs --n and --d");
            LinearSubspace v = example_family(*opts.n, *opts.d);
            if (opts.prime) v = v.reduced_mod(*opts.prime);
            InstanceFile inst = make_instance(v);
            if (!opts.json) {
                out << print_instance(inst);
                return kExitOk;
            }
            report = base_report("example", inst);
            report["outcome"] = true;
        } else {
            std::string text;
            if (opts.input) {
                std::ifstream f(*opts.input);
                if (!f) throw InputError("cannot open input file '" + *opts.input + "'");
                text = read_all(f);
            } else {
                text = read_all(in);
            }
            if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError("missing input");

            if (opts.command == "verify") {
                json parsed;
                try {
                    parsed = json::parse(text);
                } catch (const json::parse_error& e) {
                    throw InputError(std::string("report is not valid JSON: ") + e.what());
                }
                report = verify_report(parsed, opts);
            } else {
                report = decide(opts, parse_instance(text));
            }
        }
        out << (opts.json ? report.dump() + "\n" : render_text(report));
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        err << "input error: malformed report: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace locmem::cli
