#include "CLI11.hpp"
#include "etaq/charclass.hpp"
#include "etaq/dims.hpp"
#include "etaq/eisenstein.hpp"
#include "etaq/gamma0.hpp"
#include "etaq/hecke.hpp"
#include "etaq/ntheory.hpp"
#include "etaq/qseries.hpp"
#include "etaq/search.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace etaq;

namespace {

struct OutputSink {
    std::string path;

    void emit(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file " + path);
        out << payload;
    }
};

std::vector<long> parse_levels(const std::string& text) {
    std::vector<long> levels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots != std::string::npos) {
            long a = std::stol(item.substr(0, dots));
            long b = std::stol(item.substr(dots + 2));
            for (long n = a; n <= b; ++n) levels.push_back(n);
        } else if (!item.empty()) {
            levels.push_back(std::stol(item));
        }
    }
    return levels;
}

EtaQuotient quotient_at(const std::string& eta, long level) {
    EtaQuotient f = parse_eta_quotient(eta);
    if (level > 0) f = f.at_level(level);
    return f;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.d.size());
    std::ostringstream os;
    os << "N,a,v";
    for (size_t j = 0; j < cols; ++j) os << ",d" << j;
    os << "\n";
    for (const auto& r : rows) {
        os << r.N << "," << r.a.get_str() << "," << r.v;
        for (size_t j = 0; j < cols; ++j) os << "," << (j < r.d.size() ? r.d[j] : 0);
        os << "\n";
    }
    return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << (i ? ",\n " : "\n ") << "{\"N\": " << r.N << ", \"a\": " << r.a.get_str()
           << ", \"v\": " << r.v << ", \"d\": [";
        for (size_t j = 0; j < r.d.size(); ++j) os << (j ? ", " : "") << r.d[j];
        os << "]}";
    }
    os << "\n]\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with eta-quotients on Gamma_0(N)"};
    app.require_subcommand(1);

    bool json = false, csv = false;
    int threads = 1;
    OutputSink sink;
    app.add_flag("--json", json, "JSON output (default)");
    app.add_flag("--csv", csv, "CSV output where applicable");
    app.add_option("--threads", threads, "worker threads for table/search");
    app.add_option("--out", sink.path, "write the payload to a file instead of stdout");

    auto* inv_cmd = app.add_subcommand("invariants", "index, elliptic counts, cusps, genus of X_0(N)");
    long inv_N = 1;
    inv_cmd->add_option("N", inv_N, "level")->required();

    auto* cls_cmd = app.add_subcommand("classify", "classification of eta-quotient characters");
    long cls_N = 1;
    std::string cls_order = "asc";
    cls_cmd->add_option("N", cls_N, "level")->required();
    cls_cmd->add_option("--ordering", cls_order, "asc (default) or a comma list of the basis divisors");

    auto* ord_cmd = app.add_subcommand("orders", "exponents <-> cusp orders");
    bool to_x = false, to_r = false;
    std::string ord_eta, ord_x;
    long ord_level = 0;
    ord_cmd->add_flag("--to-x", to_x, "map exponents to cusp orders");
    ord_cmd->add_flag("--to-r", to_r, "map cusp orders to exponents");
    ord_cmd->add_option("--eta", ord_eta, "eta-quotient (for --to-x)");
    ord_cmd->add_option("--x", ord_x, "comma list of x_c over the sorted divisors (for --to-r)");
    ord_cmd->add_option("--level", ord_level, "ambient level");

    auto* dim_cmd = app.add_subcommand("dim", "dimension of M_k(Gamma_0(N), chi)");
    std::string dim_eta;
    long dim_level = 0, dim_t = 0;
    dim_cmd->add_option("--eta", dim_eta, "eta-quotient inducing the character")->required();
    dim_cmd->add_option("--level", dim_level, "ambient level (default: minimal)");
    dim_cmd->add_option("--t", dim_t, "Eisenstein-twist parameter");

    auto* tab_cmd = app.add_subcommand("table", "dimension statistics per level");
    std::string tab_weight, tab_levels;
    tab_cmd->add_option("--weight", tab_weight, "half-integral weight, e.g. 1/2")->required();
    tab_cmd->add_option("--levels", tab_levels, "override the level window (a..b or comma list)");

    auto* q_cmd = app.add_subcommand("qexp", "q-expansion of an eta-quotient");
    std::string q_eta;
    long q_terms = 20, q_level = 0;
    q_cmd->add_option("--eta", q_eta, "eta-quotient")->required();
    q_cmd->add_option("--terms", q_terms, "retained terms");
    q_cmd->add_option("--level", q_level, "ambient level");

    auto* h_cmd = app.add_subcommand("hecke-check", "verify c_{T_l f}(n) = c_l c_f(n)");
    std::string h_eta;
    long h_lmax = 121, h_nmax = 40;
    h_cmd->add_option("--eta", h_eta, "eta-quotient (integral exponents)")->required();
    h_cmd->add_option("--lmax", h_lmax, "largest operator index");
    h_cmd->add_option("--nmax", h_nmax, "number of coefficients past the leading one");

    auto* s_cmd = app.add_subcommand("search", "exhaustive admissible eta-quotient search");
    std::string s_levels = "1..36", s_type = "I";
    bool s_constant = false;
    s_cmd->add_option("--levels", s_levels, "levels to scan (a..b or comma list)");
    s_cmd->add_option("--type", s_type, "I, II or both");
    s_cmd->add_flag("--include-constant", s_constant, "also record the constant quotient at level 1");

    auto* e_cmd = app.add_subcommand("eis-check", "level-4 Eisenstein identity check");
    std::string e_r2 = "0", e_r4 = "0";
    long e_nmax = 8, e_cmax = 2000;
    double e_tol = 1e-4;
    e_cmd->add_option("--r2", e_r2, "exponent r2 (rational)")->required();
    e_cmd->add_option("--r4", e_r4, "exponent r4 (rational)")->required();
    e_cmd->add_option("--nmax", e_nmax, "coefficients to compare");
    e_cmd->add_option("--cmax", e_cmax, "c-sum truncation");
    e_cmd->add_option("--tol", e_tol, "pass tolerance");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ostringstream os;
        if (*inv_cmd) {
            CurveInvariants inv = invariants(inv_N);
            if (csv) {
                os << "N,m,eps2,eps3,eps_inf,genus\n"
                   << inv.N << "," << inv.index << "," << inv.eps2 << "," << inv.eps3 << ","
                   << inv.eps_inf << "," << inv.genus << "\n";
            } else {
                os << "{\"N\": " << inv.N << ", \"m\": " << inv.index << ", \"eps2\": " << inv.eps2
                   << ", \"eps3\": " << inv.eps3 << ", \"eps_inf\": " << inv.eps_inf
                   << ", \"genus\": " << inv.genus << ", \"cusps\": [";
                auto cusps = cusp_representatives(inv_N);
                for (size_t i = 0; i < cusps.size(); ++i)
                    os << (i ? ", " : "") << "{\"a\": " << cusps[i].a << ", \"c\": " << cusps[i].c
                       << ", \"width\": " << cusps[i].width << "}";
                os << "]}\n";
            }
        } else if (*cls_cmd) {
            if (cls_order == "asc") {
                os << classify(cls_N).json() << "\n";
            } else {
                os << classify_with_order(cls_N, parse_levels(cls_order)).json() << "\n";
            }
        } else if (*ord_cmd) {
            if (to_x == to_r) throw std::invalid_argument("orders: pass exactly one of --to-x, --to-r");
            if (to_x) {
                EtaQuotient f = quotient_at(ord_eta, ord_level);
                CuspOrders x = cusp_orders(f);
                os << "{\"N\": " << f.level() << ", \"x\": [";
                bool first = true;
                for (long c : divisors(f.level())) {
                    os << (first ? "" : ", ") << "\"" << x.at(c).get_str() << "\"";
                    first = false;
                }
                os << "]}\n";
            } else {
                check(ord_level >= 1, "orders --to-r: --level is required");
                CuspOrders x;
                x.N = ord_level;
                auto divs = divisors(ord_level);
                std::stringstream ss(ord_x);
                std::string item;
                size_t i = 0;
                while (std::getline(ss, item, ',')) {
                    check(i < divs.size(), "orders --to-r: too many x entries");
                    x.x[divs[i++]] = parse_rational(item);
                }
                check(i == divs.size(), "orders --to-r: expected one x entry per divisor");
                auto r = exponents_from_orders(x);
                os << EtaQuotient(ord_level, r).json() << "\n";
            }
        } else if (*dim_cmd) {
            EtaQuotient f = quotient_at(dim_eta, dim_level);
            DimQuery q{f.level(), f.exponents(), dim_t};
            DimResult r = dimension(q);
            os << "{\"status\": \"" << (r.status == DimStatus::Exact ? "exact" : "lower_bound")
               << "\", \"dim\": " << r.value.get_str() << ", \"upper\": " << r.upper_bound.get_str()
               << ", \"k\": \"" << r.weight.get_str() << "\"";
            if (r.status == DimStatus::Exact && r.weight > 2)
                os << ", \"cusp_dim\": " << dimension_cusp(q).get_str();
            os << "}\n";
        } else if (*tab_cmd) {
            Rat w = parse_rational(tab_weight);
            std::vector<TableRow> rows = tab_levels.empty()
                                             ? dimension_table(w, threads)
                                             : dimension_table(w, parse_levels(tab_levels), threads);
            os << (csv ? table_csv(rows) : table_json(rows));
        } else if (*q_cmd) {
            EtaQuotient f = quotient_at(q_eta, q_level);
            os << expand(f, q_terms).json() << "\n";
        } else if (*h_cmd) {
            EtaQuotient f = quotient_at(h_eta, 0);
            HeckeContext ctx(f);
            Rat off = Rat(ctx.stats.x_N) / 24;
            long max_index = to_long(rat_floor(Rat(h_lmax) * (off + h_nmax) - off)) + 1;
            QSeries s = expand(ctx.f, max_index);
            os << "[";
            bool first = true;
            for (long l = 1; l <= h_lmax; ++l) {
                if (!in_L_f(ctx.f, l)) continue;
                Cyclotomic cl = eigenvalue(ctx, s, l);
                for (long j = 0; j <= h_nmax; ++j) {
                    Rat n = off + j;
                    Cyclotomic lhs = hecke_coeff(ctx, s, l, n);
                    Cyclotomic rhs = cl * Cyclotomic(s.coefficient(n));
                    os << (first ? "\n " : ",\n ") << "{\"l\": " << l << ", \"n\": \"" << n.get_str()
                       << "\", \"lhs\": \"" << lhs.str() << "\", \"rhs\": \"" << rhs.str()
                       << "\", \"equal\": " << ((lhs - rhs).is_zero() ? "true" : "false") << "}";
                    first = false;
                }
            }
            os << "\n]\n";
        } else if (*s_cmd) {
            SearchOptions opts;
            opts.threads = threads;
            opts.include_constant = s_constant;
            if (s_type == "II" || s_type == "both") opts.include_type_II = true;
            auto recs = search_admissible(parse_levels(s_levels), opts);
            if (s_type == "II") {
                std::vector<AdmissibleRecord> only;
                for (auto& r : recs)
                    if (r.type == AdmissibleType::II) only.push_back(std::move(r));
                recs = std::move(only);
            }
            if (csv) {
                os << "level,count\n";
                std::map<long, long> counts;
                for (const auto& r : recs) ++counts[r.N];
                for (const auto& [N, c] : counts) os << N << "," << c << "\n";
            } else {
                for (const auto& r : recs) os << r.json() << "\n";
            }
        } else if (*e_cmd) {
            EisParams p{parse_rational(e_r2), parse_rational(e_r4), e_cmax};
            EisReport rep = verify_identity(p, e_nmax, e_tol, threads);
            os << "{\"rows\": [";
            for (size_t i = 0; i < rep.rows.size(); ++i) {
                const auto& row = rep.rows[i];
                os << (i ? ",\n  " : "\n  ") << "{\"n\": " << row.n << ", \"series_value\": "
                   << row.series_value << ", \"eis_value\": [" << row.eis_value.real() << ", "
                   << row.eis_value.imag() << "], \"abs_err\": " << row.abs_err << "}";
            }
            os << "\n], \"max_err\": " << rep.max_err << ", \"pass\": " << (rep.pass ? "true" : "false")
               << "}\n";
        }
        sink.emit(os.str());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
