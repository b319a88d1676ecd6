// dowra: exact Riordan-array calculator for Dowling-type polynomial families.
//
// Every subcommand prints deterministic output: data to stdout, diagnostics to
// stderr. Exit codes: 0 success, 1 verification or cross-check mismatch,
// 2 usage error, 3 degenerate-parameter error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dowra/dowra.hpp>
#include <dowra/fetch.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace dowra;

enum class output_format { plain, json_fmt, csv };

struct global_options {
    std::string format = "plain";
    int order = 16;

    output_format fmt() const {
        if (format == "plain") return output_format::plain;
        if (format == "json") return output_format::json_fmt;
        if (format == "csv") return output_format::csv;
        throw std::invalid_argument("unknown format '" + format + "'");
    }
};

template <coeff_ring R>
std::vector<std::string> to_strings(const std::vector<R>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += sep;
        out += xs[i];
    }
    return out;
}

template <coeff_ring R>
json matrix_json(const dense_matrix<R>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Parameter handling: commands that accept --m/--x run over the rationals when
// both are given and fully symbolically otherwise.
struct param_flags {
    std::string m, x;

    bool symbolic() const {
        if (m.empty() != x.empty()) {
            throw std::invalid_argument("--m and --x must be given together");
        }
        return m.empty();
    }
    rational m_value() const { return rational::from_string(m); }
    rational x_value() const { return rational::from_string(x); }
};

// ---------------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------------

struct seq_options {
    std::string family_name;
    std::string m, x;
    int count = 10;
};

int run_seq(const global_options& g, const seq_options& o) {
    const family f = family_from_string(o.family_name);
    const rational m = rational::from_string(o.m), x = rational::from_string(o.x);
    std::vector<rational> values;
    for (int n = 0; n < o.count; ++n) {
        values.push_back(family_value(f, m, x, n));
    }
    const auto strs = to_strings(values);
    switch (g.fmt()) {
        case output_format::plain:
            std::cout << join(strs, " ") << "\n";
            break;
        case output_format::json_fmt:
            emit_json({{"command", "seq"},
                       {"family", family_name(f)},
                       {"m", m.to_string()},
                       {"x", x.to_string()},
                       {"values", strs}});
            break;
        case output_format::csv:
            std::cout << "n,value\n";
            for (std::size_t n = 0; n < strs.size(); ++n) {
                std::cout << n << "," << strs[n] << "\n";
            }
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// poly
// ---------------------------------------------------------------------------

struct poly_options {
    std::string family_name;
    int n = 0;
};

int run_poly(const global_options& g, const poly_options& o) {
    const family f = family_from_string(o.family_name);
    const std::string p = family_poly(f, o.n).to_string();
    switch (g.fmt()) {
        case output_format::plain:
            std::cout << p << "\n";
            break;
        case output_format::json_fmt:
            emit_json({{"command", "poly"}, {"family", family_name(f)}, {"n", o.n}, {"poly", p}});
            break;
        case output_format::csv:
            std::cout << "n,poly\n" << o.n << "," << p << "\n";
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct table_options {
    std::string array;
    std::string m;
    int rows = 8;
};

int run_table(const global_options& g, const table_options& o) {
    const bool whitney = o.array == "whitney1" || o.array == "whitney2";
    if (whitney && o.m.empty()) {
        throw std::invalid_argument("table: --m is required for Whitney triangles");
    }
    rational m = whitney ? rational::from_string(o.m) : rational(0);
    auto entry = [&](long n, long k) -> rational {
        if (o.array == "whitney1") return whitney_first<rational>(m, n, k);
        if (o.array == "whitney2") return whitney_second_checked(m, n, k);
        if (o.array == "stirling1") return rational(stirling_first_signed(n, k));
        if (o.array == "stirling2") return rational(stirling_second(n, k));
        throw std::invalid_argument("unknown array '" + o.array + "'");
    };
    std::vector<std::vector<std::string>> rows;
    for (long n = 0; n < o.rows; ++n) {
        std::vector<std::string> row;
        for (long k = 0; k <= n; ++k) {
            row.push_back(entry(n, k).to_string());
        }
        rows.push_back(std::move(row));
    }
    switch (g.fmt()) {
        case output_format::plain:
            for (const auto& row : rows) {
                std::cout << join(row, "\t") << "\n";
            }
            break;
        case output_format::json_fmt: {
            json j{{"command", "table"}, {"array", o.array}};
            if (whitney) j["m"] = m.to_string();
            j["rows"] = rows;
            emit_json(j);
            break;
        }
        case output_format::csv:
            std::cout << "n,k,value\n";
            for (std::size_t n = 0; n < rows.size(); ++n) {
                for (std::size_t k = 0; k < rows[n].size(); ++k) {
                    std::cout << n << "," << k << "," << rows[n][k] << "\n";
                }
            }
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// riordan
// ---------------------------------------------------------------------------

struct riordan_options {
    std::string family_name;
    param_flags params;
    bool inverse = false;
};

template <coeff_ring R>
int run_riordan_with(const global_options& g, const riordan_options& o, const R& x, const R& m) {
    const family f = family_from_string(o.family_name);
    const exp_riordan<R> arr = o.inverse ? family_coefficient_array<R>(f, x, m, g.order)
                                         : family_moment_array<R>(f, x, m, g.order);
    const auto gs = to_strings(arr.g.coeffs());
    const auto fs = to_strings(arr.f.coeffs());
    switch (g.fmt()) {
        case output_format::plain:
            std::cout << "g: " << join(gs, ", ") << "\n";
            std::cout << "f: " << join(fs, ", ") << "\n";
            break;
        case output_format::json_fmt:
            emit_json({{"command", "riordan"},
                       {"family", family_name(f)},
                       {"inverse", o.inverse},
                       {"g", gs},
                       {"f", fs}});
            break;
        case output_format::csv:
            std::cout << "k,g,f\n";
            for (std::size_t k = 0; k < gs.size(); ++k) {
                std::cout << k << "," << gs[k] << "," << fs[k] << "\n";
            }
            break;
    }
    return 0;
}

int run_riordan(const global_options& g, const riordan_options& o) {
    if (o.params.symbolic()) {
        return run_riordan_with<mpoly>(g, o, mpoly::var_x(), mpoly::var_m());
    }
    return run_riordan_with<rational>(g, o, o.params.x_value(), o.params.m_value());
}

// ---------------------------------------------------------------------------
// production
// ---------------------------------------------------------------------------

struct production_options {
    std::string family_name;
    param_flags params;
    int size = 8;
    std::string method = "both";
};

template <coeff_ring R>
int run_production_with(const global_options& g, const production_options& o, const R& x,
                        const R& m) {
    const family f = family_from_string(o.family_name);
    const exp_riordan<R> arr = family_moment_array<R>(f, x, m, o.size);
    if (o.method == "inverse-shift" || o.method == "az") {
        const auto p = production_matrix(arr, o.method == "az"
                                                  ? production_method::az
                                                  : production_method::inverse_shift);
        if (g.fmt() == output_format::json_fmt) {
            emit_json({{"command", "production"},
                       {"family", family_name(f)},
                       {"method", o.method},
                       {"matrix", matrix_json(p)}});
        } else {
            std::cout << p.to_text();
        }
        return 0;
    }
    if (o.method != "both") {
        throw std::invalid_argument("production: unknown method '" + o.method + "'");
    }
    const auto p1 = production_matrix(arr, production_method::inverse_shift);
    const auto p2 = production_matrix(arr, production_method::az);
    std::optional<std::pair<int, int>> diff;
    for (int i = 0; i < p1.rows() && !diff; ++i) {
        for (int j = 0; j < p1.cols() && !diff; ++j) {
            if (!(p1(i, j) == p2(i, j))) diff = {i, j};
        }
    }
    if (g.fmt() == output_format::json_fmt) {
        json j{{"command", "production"},
               {"family", family_name(f)},
               {"method", "both"},
               {"agree", !diff.has_value()}};
        if (diff) {
            j["diff"] = {{"row", diff->first},
                         {"col", diff->second},
                         {"inverse_shift", p1(diff->first, diff->second).to_string()},
                         {"az", p2(diff->first, diff->second).to_string()}};
        } else {
            j["matrix"] = matrix_json(p1);
        }
        emit_json(j);
    } else {
        std::cout << "agree: " << (diff ? "false" : "true") << "\n";
        if (diff) {
            std::cout << "first difference at (" << diff->first << "," << diff->second
                      << "): inverse-shift = " << p1(diff->first, diff->second).to_string()
                      << ", az = " << p2(diff->first, diff->second).to_string() << "\n";
        } else {
            std::cout << p1.to_text();
        }
    }
    return diff ? 1 : 0;
}

int run_production(const global_options& g, const production_options& o) {
    if (o.params.symbolic()) {
        return run_production_with<mpoly>(g, o, mpoly::var_x(), mpoly::var_m());
    }
    return run_production_with<rational>(g, o, o.params.x_value(), o.params.m_value());
}

// ---------------------------------------------------------------------------
// recurrence / cfrac
// ---------------------------------------------------------------------------

struct recurrence_options {
    std::string family_name;
    param_flags params;
    int depth = 8;
    bool s_fraction = false;          // cfrac only
    std::string command = "recurrence"; // reported in JSON output
};

template <coeff_ring R>
int run_recurrence_with(const global_options& g, const recurrence_options& o, const R& x,
                        const R& m) {
    const family f = family_from_string(o.family_name);
    if (o.s_fraction) {
        const auto s = family_sfraction<R>(f, x, m, o.depth);
        const auto strs = to_strings(s.a);
        switch (g.fmt()) {
            case output_format::plain:
                std::cout << "a: " << join(strs, ", ") << "\n";
                break;
            case output_format::json_fmt:
                emit_json({{"command", "cfrac"},
                           {"family", family_name(f)},
                           {"kind", "s-fraction"},
                           {"a", strs}});
                break;
            case output_format::csv:
                std::cout << "k,a\n";
                for (std::size_t k = 0; k < strs.size(); ++k) {
                    std::cout << (k + 1) << "," << strs[k] << "\n";
                }
                break;
        }
        return 0;
    }
    const auto rec = family_recurrence<R>(f, x, m, o.depth);
    const auto alpha = to_strings(rec.alpha);
    const auto beta = to_strings(rec.beta);
    switch (g.fmt()) {
        case output_format::plain:
            std::cout << "alpha: " << join(alpha, ", ") << "\n";
            std::cout << "beta: " << join(beta, ", ") << "\n";
            break;
        case output_format::json_fmt:
            emit_json({{"command", o.command},
                       {"family", family_name(f)},
                       {"alpha", alpha},
                       {"beta", beta}});
            break;
        case output_format::csv:
            std::cout << "n,alpha,beta\n";
            for (std::size_t n = 0; n < alpha.size(); ++n) {
                std::cout << n << "," << alpha[n] << "," << (n >= 1 ? beta[n - 1] : "") << "\n";
            }
            break;
    }
    return 0;
}

int run_recurrence(const global_options& g, const recurrence_options& o) {
    if (o.params.symbolic()) {
        return run_recurrence_with<mpoly>(g, o, mpoly::var_x(), mpoly::var_m());
    }
    return run_recurrence_with<rational>(g, o, o.params.x_value(), o.params.m_value());
}

// ---------------------------------------------------------------------------
// orthopoly
// ---------------------------------------------------------------------------

struct orthopoly_options {
    std::string family_name;
    param_flags params;
    int n = 6;
};

template <coeff_ring R>
int run_orthopoly_with(const global_options& g, const orthopoly_options& o, const R& x,
                       const R& m) {
    const family f = family_from_string(o.family_name);
    const auto rec = family_recurrence<R>(f, x, m, std::max(o.n, 1));
    const auto polys = ortho_polys(rec, o.n);
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : polys) rows.push_back(to_strings(p));
    switch (g.fmt()) {
        case output_format::plain:
            for (std::size_t k = 0; k < rows.size(); ++k) {
                std::cout << "P_" << k << ": " << join(rows[k], ", ") << "\n";
            }
            break;
        case output_format::json_fmt:
            emit_json({{"command", "orthopoly"},
                       {"family", family_name(f)},
                       {"n", o.n},
                       {"polys", rows}});
            break;
        case output_format::csv:
            std::cout << "n,k,coefficient\n";
            for (std::size_t p = 0; p < rows.size(); ++p) {
                for (std::size_t k = 0; k < rows[p].size(); ++k) {
                    std::cout << p << "," << k << "," << rows[p][k] << "\n";
                }
            }
            break;
    }
    return 0;
}

int run_orthopoly(const global_options& g, const orthopoly_options& o) {
    if (o.params.symbolic()) {
        return run_orthopoly_with<mpoly>(g, o, mpoly::var_x(), mpoly::var_m());
    }
    return run_orthopoly_with<rational>(g, o, o.params.x_value(), o.params.m_value());
}

// ---------------------------------------------------------------------------
// hankel
// ---------------------------------------------------------------------------

struct hankel_options {
    std::string family_name;
    std::string m, x;
    int count = 5;
    bool check = false;
};

int run_hankel(const global_options& g, const hankel_options& o) {
    const family f = family_from_string(o.family_name);
    const rational m = rational::from_string(o.m), x = rational::from_string(o.x);
    if (o.count < 1) {
        throw std::invalid_argument("hankel: --count must be positive");
    }
    const int top = o.count - 1;
    std::vector<rational> seq;
    for (int n = 0; n <= 2 * top; ++n) {
        seq.push_back(family_value(f, m, x, n));
    }
    const auto h = hankel_transform(seq, top);
    bool match = true;
    if (o.check) {
        const auto j = family_recurrence<rational>(f, x, m, top + 1);
        for (int n = 0; n <= top; ++n) {
            const rational closed = closed_form_hankel(f, n).specialize(x, m);
            const rational product_formula = jfraction_hankel(j, n);
            if (!(h[static_cast<std::size_t>(n)] == closed) ||
                !(h[static_cast<std::size_t>(n)] == product_formula)) {
                match = false;
            }
        }
    }
    const auto strs = to_strings(h);
    switch (g.fmt()) {
        case output_format::plain:
            std::cout << join(strs, " ") << "\n";
            if (o.check) {
                std::cout << "closed_form_match: " << (match ? "true" : "false") << "\n";
            }
            break;
        case output_format::json_fmt: {
            json j{{"command", "hankel"},
                   {"family", family_name(f)},
                   {"m", m.to_string()},
                   {"x", x.to_string()},
                   {"values", strs}};
            if (o.check) j["closed_form_match"] = match;
            emit_json(j);
            break;
        }
        case output_format::csv:
            std::cout << "n,h\n";
            for (std::size_t n = 0; n < strs.size(); ++n) {
                std::cout << n << "," << strs[n] << "\n";
            }
            break;
    }
    return (o.check && !match) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct verify_options {
    std::string case_id;
    bool all = false;
    bool fetch = false;
    std::string fixtures_dir;
};

int run_verify(const global_options& g, const verify_options& o) {
    std::string fixtures = o.fixtures_dir;
    if (fixtures.empty()) {
        const char* env = std::getenv("DOWRA_FIXTURES");
        fixtures = env ? env : "fixtures";
    }
    std::vector<golden_case> selected;
    for (const auto& c : golden_cases()) {
        if (o.case_id.empty() || o.all || c.oeis_id == o.case_id || c.label == o.case_id) {
            selected.push_back(c);
        }
    }
    if (selected.empty()) {
        throw std::invalid_argument("verify: no case matches '" + o.case_id + "'");
    }

    bool all_ok = true;
    json results = json::array();
    for (const auto& c : selected) {
        const auto rep = verify_case(c, static_cast<long>(c.values.size()));
        all_ok = all_ok && rep.ok;

        std::string bfile_note = "none cached";
        long covered = -1;
        try {
            const std::string bytes = fetch_bfile(c.oeis_id, {o.fetch, fixtures});
            covered = check_bfile_prefix(c, parse_bfile(bytes));
            bfile_note = std::to_string(covered) + " aligned";
        } catch (const fixture_miss_error&) {
            // offline with no cached b-file: the embedded check alone decides
        } catch (const std::runtime_error& e) {
            all_ok = false;
            bfile_note = std::string("error: ") + e.what();
        }

        if (g.fmt() == output_format::json_fmt) {
            json j{{"case", rep.label},
                   {"oeis", c.oeis_id},
                   {"family", family_name(c.fam)},
                   {"m", c.m.to_string()},
                   {"x", c.x.to_string()},
                   {"checked", rep.checked},
                   {"status", rep.ok ? "ok" : "mismatch"}};
            if (rep.first_mismatch) {
                j["first_mismatch"] = {{"index", rep.first_mismatch->index},
                                       {"expected", rep.first_mismatch->expected.get_str()},
                                       {"got", rep.first_mismatch->got.get_str()}};
            }
            if (covered >= 0) j["bfile_aligned"] = covered;
            results.push_back(std::move(j));
        } else {
            std::cout << rep.label << " [" << family_name(c.fam) << ", m=" << c.m.to_string()
                      << ", x=" << c.x.to_string() << "]: ";
            if (rep.ok) {
                std::cout << "ok, " << rep.checked << " values checked (b-file: " << bfile_note
                          << ")\n";
            } else {
                std::cout << "MISMATCH at n=" << rep.first_mismatch->index << ": expected "
                          << rep.first_mismatch->expected.get_str() << ", got "
                          << rep.first_mismatch->got.get_str() << "\n";
            }
        }
    }
    if (g.fmt() == output_format::json_fmt) {
        emit_json({{"command", "verify"}, {"cases", results}});
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Riordan arrays, moments, continued fractions and Hankel transforms "
                 "for Dowling-type polynomial families"};
    app.require_subcommand(1);

    global_options g;
    app.add_option("--format", g.format, "output format: plain, json or csv")
        ->default_val("plain")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--order", g.order, "series truncation order")->default_val(16);

    seq_options seq;
    auto* seq_cmd = app.add_subcommand("seq", "family values by definition sum");
    seq_cmd->add_option("--family", seq.family_name)->required();
    seq_cmd->add_option("--m", seq.m)->required();
    seq_cmd->add_option("--x", seq.x)->required();
    seq_cmd->add_option("--count", seq.count)->default_val(10);

    poly_options poly;
    auto* poly_cmd = app.add_subcommand("poly", "the n-th family polynomial, symbolic in (x, m)");
    poly_cmd->add_option("--family", poly.family_name)->required();
    poly_cmd->add_option("--n", poly.n)->required();

    table_options table;
    auto* table_cmd = app.add_subcommand("table", "Whitney / Stirling triangles");
    table_cmd->add_option("--array", table.array)
        ->required()
        ->check(CLI::IsMember({"whitney1", "whitney2", "stirling1", "stirling2"}));
    table_cmd->add_option("--m", table.m, "required for Whitney triangles");
    table_cmd->add_option("--rows", table.rows)->default_val(8);

    riordan_options riordan;
    auto* riordan_cmd = app.add_subcommand("riordan", "g/f series of the family moment array");
    riordan_cmd->add_option("--family", riordan.family_name)->required();
    riordan_cmd->add_flag("--inverse", riordan.inverse, "the coefficient array instead");
    riordan_cmd->add_option("--m", riordan.params.m);
    riordan_cmd->add_option("--x", riordan.params.x);

    production_options production;
    auto* production_cmd = app.add_subcommand("production", "production matrix of a moment array");
    production_cmd->add_option("--family", production.family_name)->required();
    production_cmd->add_option("--size", production.size)->default_val(8);
    production_cmd->add_option("--method", production.method)
        ->default_val("both")
        ->check(CLI::IsMember({"inverse-shift", "az", "both"}));
    production_cmd->add_option("--m", production.params.m);
    production_cmd->add_option("--x", production.params.x);

    recurrence_options recurrence;
    auto* recurrence_cmd = app.add_subcommand("recurrence", "three-term recurrence coefficients");
    recurrence_cmd->add_option("--family", recurrence.family_name)->required();
    recurrence_cmd->add_option("--depth", recurrence.depth)->default_val(8);
    recurrence_cmd->add_option("--m", recurrence.params.m);
    recurrence_cmd->add_option("--x", recurrence.params.x);

    recurrence_options cfrac;
    cfrac.command = "cfrac";
    auto* cfrac_cmd = app.add_subcommand("cfrac", "continued fraction of the family OGF");
    cfrac_cmd->add_option("--family", cfrac.family_name)->required();
    cfrac_cmd->add_option("--depth", cfrac.depth)->default_val(8);
    cfrac_cmd->add_flag("--s-fraction", cfrac.s_fraction, "S-fraction instead of J-fraction");
    cfrac_cmd->add_option("--m", cfrac.params.m);
    cfrac_cmd->add_option("--x", cfrac.params.x);

    orthopoly_options orthopoly;
    auto* orthopoly_cmd = app.add_subcommand("orthopoly", "orthogonal polynomials P_0..P_n");
    orthopoly_cmd->add_option("--family", orthopoly.family_name)->required();
    orthopoly_cmd->add_option("--n", orthopoly.n)->required();
    orthopoly_cmd->add_option("--m", orthopoly.params.m);
    orthopoly_cmd->add_option("--x", orthopoly.params.x);

    hankel_options hankel;
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform of family values");
    hankel_cmd->add_option("--family", hankel.family_name)->required();
    hankel_cmd->add_option("--m", hankel.m)->required();
    hankel_cmd->add_option("--x", hankel.x)->required();
    hankel_cmd->add_option("--count", hankel.count)->default_val(5);
    hankel_cmd->add_flag("--check", hankel.check, "compare against the closed form");

    verify_options verify;
    auto* verify_cmd = app.add_subcommand("verify", "check family values against OEIS references");
    verify_cmd->add_option("--case", verify.case_id, "sequence id or case label");
    verify_cmd->add_flag("--all", verify.all, "run every embedded case (the default)");
    verify_cmd->add_flag("--fetch", verify.fetch, "fetch b-files from oeis.org");
    verify_cmd->add_option("--fixtures", verify.fixtures_dir, "b-file cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*seq_cmd) return run_seq(g, seq);
        if (*poly_cmd) return run_poly(g, poly);
        if (*table_cmd) return run_table(g, table);
        if (*riordan_cmd) return run_riordan(g, riordan);
        if (*production_cmd) return run_production(g, production);
        if (*recurrence_cmd) return run_recurrence(g, recurrence);
        if (*cfrac_cmd) return run_recurrence(g, cfrac);
        if (*orthopoly_cmd) return run_orthopoly(g, orthopoly);
        if (*hankel_cmd) return run_hankel(g, hankel);
        if (*verify_cmd) return run_verify(g, verify);
    } catch (const degenerate_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
