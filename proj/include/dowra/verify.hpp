#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dowling.hpp"

namespace dowra {

class bfile_parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class fixture_miss_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One OEIS identification: the family specialization that reproduces the
/// sequence, and the reference values it must reproduce. `oeis_offset` is the
/// shift between the family index n and the OEIS index (values[n] = a(n + oeis_offset)).
struct golden_case {
    std::string oeis_id;
    std::string label; // distinguishes double identifications of one sequence
    family fam;
    rational m;
    rational x;
    int oeis_offset;
    std::vector<mpz_class> values;
};

/// The embedded reference table. A000522 appears twice: it arises both as the
/// tanny family at (m,x) = (0,1) and as the eulerian family at (m,x) = (0,2).
inline const std::vector<golden_case>& golden_cases() {
    static const std::vector<golden_case> cases = [] {
        auto v = [](std::initializer_list<long long> xs) {
            std::vector<mpz_class> out;
            for (long long x : xs) out.emplace_back(static_cast<long>(x));
            return out;
        };
        std::vector<golden_case> c;
        c.push_back({"A000110", "A000110", family::dowling, rational(1), rational(1), 1,
                     v({1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570})});
        c.push_back({"A007405", "A007405", family::dowling, rational(2), rational(1), 0,
                     v({1, 2, 6, 24, 116, 648, 4088, 28640, 219920, 1832224, 16430176})});
        c.push_back({"A035009", "A035009", family::dowling, rational(1), rational(2), 1,
                     v({1, 3, 11, 47, 227, 1215, 7107, 44959, 305091, 2206399, 16913987})});
        c.push_back({"A000522", "A000522-tanny", family::tanny, rational(0), rational(1), 0,
                     v({1, 2, 5, 16, 65, 326, 1957, 13700, 109601, 986410, 9864101})});
        c.push_back({"A000629", "A000629", family::tanny, rational(1), rational(1), 0,
                     v({1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522, 204495126})});
        c.push_back({"A010844", "A010844", family::tanny, rational(0), rational(2), 0,
                     v({1, 3, 13, 79, 633, 6331, 75973, 1063623, 17017969, 306323443,
                        6126468861LL, 134782314943LL})});
        c.push_back({"A004123", "A004123", family::geometric, rational(1), rational(2), 0,
                     v({1, 2, 10, 74, 730, 9002, 133210, 2299754, 45375130, 1007179562})});
        c.push_back({"A000522", "A000522-eulerian", family::eulerian, rational(0), rational(2), 0,
                     v({1, 2, 5, 16, 65, 326, 1957, 13700, 109601, 986410, 9864101})});
        c.push_back({"A119880", "A119880", family::eulerian, rational(-2), rational(2), 0,
                     v({1, 2, 3, 2, -3, 2, 63, 2, -1383, 2, 50523, 2, -2702763, 2, 199360983})});
        c.push_back({"A123227", "A123227", family::eulerian, rational(1), rational(3), 0,
                     v({1, 3, 12, 66, 480, 4368, 47712, 608016, 8855040, 145083648})});
        return c;
    }();
    return cases;
}

/// Parses OEIS b-file text: one `index value` pair per line, `#` comments and
/// blank lines skipped, indices need not start at zero.
inline std::vector<std::pair<long long, mpz_class>> parse_bfile(const std::string& text) {
    std::vector<std::pair<long long, mpz_class>> out;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    auto is_integer = [](const std::string& tok) {
        if (tok.empty()) return false;
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size()) return false;
        for (; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
        }
        return true;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string idx_tok, val_tok, extra;
        if (!(ls >> idx_tok)) continue; // blank line
        if (idx_tok[0] == '#') continue;
        if (!(ls >> val_tok) || (ls >> extra) || !is_integer(idx_tok) || !is_integer(val_tok)) {
            throw bfile_parse_error("b-file parse error at line " + std::to_string(lineno) +
                                    ": '" + line + "'");
        }
        out.emplace_back(std::stoll(idx_tok), mpz_class(val_tok));
    }
    return out;
}

inline std::string bfile_name(const std::string& oeis_id) {
    std::string digits = oeis_id;
    if (!digits.empty() && (digits[0] == 'A' || digits[0] == 'a')) {
        digits = digits.substr(1);
    }
    return "b" + digits + ".txt";
}

/// Reads a cached b-file from the fixtures directory; a missing file is the
/// offline cache-miss condition and is reported as such.
inline std::string read_fixture(const std::string& oeis_id, const std::string& fixtures_dir) {
    const std::string path = fixtures_dir + "/" + bfile_name(oeis_id);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw fixture_miss_error("no cached b-file for " + oeis_id + " at " + path +
                                 " (offline mode)");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct mismatch {
    long index;
    mpz_class expected;
    mpz_class got;
};

struct verify_report {
    std::string label;
    long checked = 0;
    bool ok = true;
    std::optional<mismatch> first_mismatch;
};

/// Recomputes the first `count` family values by definition sum and compares
/// them with the embedded reference digits. Mismatches are report content,
/// not exceptions.
inline verify_report verify_case(const golden_case& c, long count) {
    if (count < 0 || static_cast<std::size_t>(count) > c.values.size()) {
        throw std::invalid_argument("verify_case: only " + std::to_string(c.values.size()) +
                                    " reference values available for " + c.label);
    }
    verify_report rep;
    rep.label = c.label;
    for (long n = 0; n < count; ++n) {
        const rational got = family_value(c.fam, c.m, c.x, n);
        const rational expected{c.values[static_cast<std::size_t>(n)]};
        ++rep.checked;
        if (!(got == expected)) {
            rep.ok = false;
            rep.first_mismatch = mismatch{n, expected.numerator(), got.numerator()};
            break;
        }
    }
    return rep;
}

/// Checks that the embedded values form a prefix of a parsed b-file after
/// offset alignment: b-file entry at index n + oeis_offset must equal values[n].
/// Returns the number of values actually covered by the b-file.
inline long check_bfile_prefix(const golden_case& c,
                               const std::vector<std::pair<long long, mpz_class>>& entries) {
    long covered = 0;
    for (std::size_t n = 0; n < c.values.size(); ++n) {
        const long long want_index = static_cast<long long>(n) + c.oeis_offset;
        for (const auto& [idx, val] : entries) {
            if (idx == want_index) {
                if (val != c.values[n]) {
                    throw std::runtime_error(c.label + ": b-file value at index " +
                                             std::to_string(want_index) + " is " +
                                             val.get_str() + ", embedded reference has " +
                                             c.values[n].get_str());
                }
                ++covered;
                break;
            }
        }
    }
    return covered;
}

} // namespace dowra
