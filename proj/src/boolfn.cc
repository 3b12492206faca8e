// Copyright 2026 The sacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sacq/boolfn.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sacq/errors.h"

namespace sacq {

ParseError::ParseError(const std::string &what, std::size_t line, std::size_t column)
    : std::invalid_argument(what), line_(line), column_(column) {
}

namespace {

std::string located(const std::string &msg, std::size_t line, std::size_t column) {
    std::ostringstream ss;
    if (line > 0) {
        ss << "line " << line << ", ";
    }
    if (column > 0) {
        ss << "column " << column << ": ";
    }
    ss << msg;
    return ss.str();
}

[[noreturn]] void parse_fail(const std::string &msg, std::size_t column = 0, std::size_t line = 0) {
    throw ParseError(located(msg, line, column), line, column);
}

/// log2 of a table length, or -1 when it is not a power of two.
int table_log2(std::size_t len) {
    if (len == 0 || !std::has_single_bit(len)) {
        return -1;
    }
    return std::countr_zero(len);
}

int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    return -1;
}

}  // namespace

Vec unit_direction(int n, int i) {
    BooleanFunction::check_vars(n);
    if (i < 1 || i > n) {
        throw std::out_of_range("coordinate " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    return Vec{1} << (n - i);
}

void BooleanFunction::check_vars(int n) {
    if (n < kMinVars || n > kMaxVars) {
        throw SizeLimitError(
            "variable count " + std::to_string(n) + " outside supported range [" + std::to_string(kMinVars) + ", " +
            std::to_string(kMaxVars) + "]");
    }
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)), weight_(0) {
    check_vars(n);
    if (table_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument(
            "truth table has " + std::to_string(table_.size()) + " entries, expected 2^" + std::to_string(n));
    }
    for (auto v : table_) {
        if (v > 1) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
        weight_ += v;
    }
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
    check_vars(n);
    return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

std::string BooleanFunction::to_binary_string() const {
    std::string out(table_.size(), '0');
    for (std::size_t x = 0; x < table_.size(); ++x) {
        out[x] = table_[x] ? '1' : '0';
    }
    return out;
}

std::string BooleanFunction::to_hex_string() const {
    if (n_ < 2) {
        throw std::invalid_argument("hex form needs at least 2 variables");
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(table_.size() / 4, '0');
    for (std::size_t d = 0; d < out.size(); ++d) {
        int v = (table_[4 * d] << 3) | (table_[4 * d + 1] << 2) | (table_[4 * d + 2] << 1) | table_[4 * d + 3];
        out[d] = digits[v];
    }
    return out;
}

BooleanFunction parse_binary(std::string_view bits, std::optional<int> n) {
    std::vector<std::uint8_t> table;
    table.reserve(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        char c = bits[k];
        if (c != '0' && c != '1') {
            parse_fail(std::string("expected '0' or '1', found '") + c + "'", k + 1);
        }
        table.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    int log2 = table_log2(table.size());
    if (log2 < 0) {
        parse_fail("truth table length " + std::to_string(table.size()) + " is not a power of two");
    }
    if (n.has_value() && *n != log2) {
        parse_fail(
            "truth table length " + std::to_string(table.size()) + " does not match n=" + std::to_string(*n));
    }
    BooleanFunction::check_vars(log2);
    return BooleanFunction(log2, std::move(table));
}

BooleanFunction parse_hex(std::string_view hex, std::optional<int> n) {
    std::size_t offset = 0;
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
        offset = 2;
    }
    std::vector<std::uint8_t> table;
    table.reserve(4 * (hex.size() - offset));
    for (std::size_t k = offset; k < hex.size(); ++k) {
        int v = hex_digit_value(hex[k]);
        if (v < 0) {
            parse_fail(std::string("invalid hex digit '") + hex[k] + "'", k + 1);
        }
        for (int b = 3; b >= 0; --b) {
            table.push_back(static_cast<std::uint8_t>((v >> b) & 1));
        }
    }
    if (table.empty()) {
        parse_fail("empty hex truth table");
    }
    int log2 = table_log2(table.size());
    if (log2 < 0) {
        parse_fail("hex truth table expands to " + std::to_string(table.size()) + " entries, not a power of two");
    }
    if (n.has_value() && *n != log2) {
        if (*n < 2) {
            parse_fail("hex truth tables need n >= 2");
        }
        parse_fail("hex string has " + std::to_string(hex.size() - offset) + " digits, expected 2^" +
                   std::to_string(*n) + "/4");
    }
    BooleanFunction::check_vars(log2);
    return BooleanFunction(log2, std::move(table));
}

namespace {

/// Recursive-descent reader for the ANF grammar. Monomials are collected as
/// masks over variable indices (bit i-1 for x_i) until n is known.
class AnfReader {
   public:
    explicit AnfReader(std::string_view text) : text_(text) {
    }

    std::vector<std::uint32_t> read_sum() {
        std::vector<std::uint32_t> terms;
        skip_space();
        if (pos_ == text_.size()) {
            parse_fail("empty ANF expression", pos_ + 1);
        }
        while (true) {
            auto term = read_product();
            if (term.has_value()) {
                terms.push_back(*term);
            }
            skip_space();
            if (pos_ == text_.size()) {
                break;
            }
            if (text_[pos_] != '+') {
                parse_fail(std::string("expected '+' or '*', found '") + text_[pos_] + "'", pos_ + 1);
            }
            ++pos_;
        }
        return terms;
    }

    int max_index() const {
        return max_index_;
    }
    std::size_t max_index_column() const {
        return max_index_column_;
    }

   private:
    /// nullopt when the product contains the factor 0.
    std::optional<std::uint32_t> read_product() {
        std::uint32_t mask = 0;
        bool zero = false;
        while (true) {
            skip_space();
            if (pos_ == text_.size()) {
                parse_fail("expected a factor", pos_ + 1);
            }
            char c = text_[pos_];
            if (c == 'x') {
                std::size_t start = pos_;
                ++pos_;
                std::size_t digits_begin = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
                if (digits_begin == pos_) {
                    parse_fail("expected a variable index after 'x'", pos_ + 1);
                }
                if (pos_ - digits_begin > 3) {
                    parse_fail("variable index too large", start + 1);
                }
                int idx = std::stoi(std::string(text_.substr(digits_begin, pos_ - digits_begin)));
                if (idx < 1) {
                    parse_fail("variable indices start at x1", start + 1);
                }
                if (idx > kMaxVars) {
                    throw SizeLimitError("column " + std::to_string(start + 1) + ": variable index x" +
                                         std::to_string(idx) + " exceeds the limit of " + std::to_string(kMaxVars));
                }
                if (idx > max_index_) {
                    max_index_ = idx;
                    max_index_column_ = start + 1;
                }
                mask |= std::uint32_t{1} << (idx - 1);
            } else if (c == '1') {
                ++pos_;
            } else if (c == '0') {
                ++pos_;
                zero = true;
            } else {
                parse_fail(std::string("unexpected character '") + c + "'", pos_ + 1);
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (zero) {
            return std::nullopt;
        }
        return mask;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int max_index_ = 0;
    std::size_t max_index_column_ = 0;
};

}  // namespace

BooleanFunction parse_anf(std::string_view expr, std::optional<int> n) {
    AnfReader reader(expr);
    auto terms = reader.read_sum();
    int vars;
    if (n.has_value()) {
        BooleanFunction::check_vars(*n);
        if (reader.max_index() > *n) {
            parse_fail("variable x" + std::to_string(reader.max_index()) + " out of range for n=" + std::to_string(*n),
                       reader.max_index_column());
        }
        vars = *n;
    } else {
        if (reader.max_index() == 0) {
            parse_fail("cannot infer n from an expression without variables; declare n");
        }
        vars = reader.max_index();
    }

    // ANF coefficients, then the binary Moebius transform gives the table.
    std::vector<std::uint8_t> table(std::size_t{1} << vars, 0);
    for (std::uint32_t term : terms) {
        Vec monomial = 0;
        for (int i = 1; i <= vars; ++i) {
            if (term & (std::uint32_t{1} << (i - 1))) {
                monomial |= Vec{1} << (vars - i);
            }
        }
        table[monomial] ^= 1;
    }
    for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
        for (std::size_t x = 0; x < table.size(); ++x) {
            if (x & bit) {
                table[x] ^= table[x ^ bit];
            }
        }
    }
    return BooleanFunction(vars, std::move(table));
}

BooleanFunction parse_function(const FunctionSource &source) {
    switch (source.kind) {
        case FunctionSource::Kind::Binary:
            return parse_binary(source.text, source.n);
        case FunctionSource::Kind::Hex:
            return parse_hex(source.text, source.n);
        case FunctionSource::Kind::Anf:
            return parse_anf(source.text, source.n);
    }
    throw std::invalid_argument("unknown function source kind");
}

namespace {

std::string_view rtrim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

BooleanFunction read_truth_table(std::istream &in) {
    std::string header;
    if (!std::getline(in, header)) {
        parse_fail("missing header line \"n=<k>\"", 1, 1);
    }
    std::string_view h = rtrim(header);
    if (h.size() < 3 || h.substr(0, 2) != "n=") {
        parse_fail("expected header \"n=<k>\"", 1, 1);
    }
    std::string_view digits = h.substr(2);
    int n = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(digits[k])) || k >= 3) {
            parse_fail("invalid variable count", 3 + k, 1);
        }
        n = 10 * n + (digits[k] - '0');
    }
    BooleanFunction::check_vars(n);

    std::string body;
    if (!std::getline(in, body)) {
        parse_fail("missing truth-table line", 1, 2);
    }
    std::string_view b = rtrim(body);
    bool hex = b.size() >= 2 && b[0] == '0' && (b[1] == 'x' || b[1] == 'X');
    try {
        return hex ? parse_hex(b, n) : parse_binary(b, n);
    } catch (const ParseError &e) {
        // Re-anchor the inner error at line 2.
        std::string msg = e.what();
        auto colon = msg.find(": ");
        if (e.column() > 0 && colon != std::string::npos) {
            msg = msg.substr(colon + 2);
        }
        throw ParseError(located(msg, 2, e.column()), 2, e.column());
    }
}

BooleanFunction load_truth_table_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open truth-table file '" + path + "'");
    }
    return read_truth_table(in);
}

void write_truth_table(std::ostream &out, const BooleanFunction &f, bool hex) {
    out << "n=" << f.num_vars() << "\n";
    if (hex) {
        out << "0x" << f.to_hex_string() << "\n";
    } else {
        out << f.to_binary_string() << "\n";
    }
}

BooleanFunction derivative(const BooleanFunction &f, Vec c) {
    if (c >= f.size()) {
        throw std::invalid_argument("direction does not fit in " + std::to_string(f.num_vars()) + " variables");
    }
    std::vector<std::uint8_t> out(f.size());
    for (Vec x = 0; x < f.size(); ++x) {
        out[x] = static_cast<std::uint8_t>(f.value(x ^ c) ^ f.value(x));
    }
    return BooleanFunction(f.num_vars(), std::move(out));
}

std::int64_t bias(const BooleanFunction &f) {
    return static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(f.weight());
}

std::uint64_t distance(const BooleanFunction &a, const BooleanFunction &b) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("distance between functions of different arity");
    }
    std::uint64_t d = 0;
    for (std::size_t x = 0; x < a.size(); ++x) {
        d += a.table()[x] != b.table()[x];
    }
    return d;
}

FourierSpectrum::FourierSpectrum(int n, std::vector<std::int64_t> walsh)
    : n_(n), walsh_(std::move(walsh)), coeffs_(walsh_.size()) {
    const double scale = std::ldexp(1.0, -n);
    for (std::size_t w = 0; w < walsh_.size(); ++w) {
        coeffs_[w] = static_cast<double>(walsh_[w]) * scale;
    }
}

AutocorrSpectrum::AutocorrSpectrum(int n, std::vector<std::int64_t> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
}

FourierSpectrum walsh_spectrum(const BooleanFunction &f) {
    std::vector<std::int64_t> w(f.size());
    for (Vec x = 0; x < f.size(); ++x) {
        w[x] = f.character(x);
    }
    walsh_transform(std::span<std::int64_t>(w));
    return FourierSpectrum(f.num_vars(), std::move(w));
}

std::vector<double> inverse_walsh(const FourierSpectrum &spectrum) {
    std::vector<double> values(spectrum.coeffs().begin(), spectrum.coeffs().end());
    walsh_transform(std::span<double>(values));
    return values;
}

AutocorrSpectrum autocorrelation_spectrum(const BooleanFunction &f) {
    const int n = f.num_vars();
    std::vector<std::int64_t> w(f.size());
    for (Vec x = 0; x < f.size(); ++x) {
        w[x] = f.character(x);
    }
    walsh_transform(std::span<std::int64_t>(w));
    // Partial sums of the second pass stay below sum_w W(w)^2 = 4^n <= 2^48.
    for (auto &v : w) {
        v *= v;
    }
    walsh_transform(std::span<std::int64_t>(w));
    for (auto &v : w) {
        if (v % (std::int64_t{1} << n) != 0) {
            throw InvariantError("autocorrelation is not an integer");
        }
        v >>= n;
    }
    return AutocorrSpectrum(n, std::move(w));
}

std::vector<SpectralHalves> spectral_halves(const FourierSpectrum &spectrum) {
    const int n = spectrum.num_vars();
    std::vector<SpectralHalves> halves(n, SpectralHalves{0.0, 0.0});
    for (int i = 1; i <= n; ++i) {
        Vec bit = unit_direction(n, i);
        for (Vec w = 0; w < spectrum.coeffs().size(); ++w) {
            double sq = spectrum[w] * spectrum[w];
            if (w & bit) {
                halves[i - 1].one += sq;
            } else {
                halves[i - 1].zero += sq;
            }
        }
    }
    return halves;
}

SacReport sac_report(const BooleanFunction &f) {
    const int n = f.num_vars();
    auto ac = autocorrelation_spectrum(f);
    SacReport report{n, {}, 0, true};
    std::int64_t total = 0;
    for (int i = 1; i <= n; ++i) {
        std::int64_t v = ac[unit_direction(n, i)];
        report.directional.push_back(v);
        total += v < 0 ? -v : v;
        if (v != 0) {
            report.is_sac = false;
        }
    }
    report.epsilon_exact = total / 2;
    return report;
}

std::vector<BooleanFunction> enumerate_functions(int n) {
    BooleanFunction::check_vars(n);
    if (n > kMaxEnumerationVars) {
        throw SizeLimitError("exhaustive enumeration refuses n > " + std::to_string(kMaxEnumerationVars));
    }
    const std::size_t len = std::size_t{1} << n;
    const std::uint64_t count = std::uint64_t{1} << len;
    std::vector<BooleanFunction> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        out.push_back(BooleanFunction::from_predicate(n, [&](Vec x) { return (code >> x) & 1; }));
    }
    return out;
}

DistanceBoundAudit audit_distance_bound(int n) {
    auto all = enumerate_functions(n);
    std::vector<const BooleanFunction *> sac_set;
    std::vector<std::int64_t> eps(all.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
        auto r = sac_report(all[k]);
        eps[k] = r.epsilon_exact;
        if (r.is_sac) {
            sac_set.push_back(&all[k]);
        }
    }
    DistanceBoundAudit audit{n, all.size(), sac_set.size(), 0, {}};
    for (std::size_t k = 0; k < all.size(); ++k) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (const auto *g : sac_set) {
            best = std::min(best, distance(all[k], *g));
        }
        if (best > static_cast<std::uint64_t>(eps[k])) {
            audit.counterexamples.push_back(DistanceBoundCase{all[k], best, eps[k]});
        } else if (best == static_cast<std::uint64_t>(eps[k])) {
            ++audit.tight;
        }
    }
    return audit;
}

}  // namespace sacq
