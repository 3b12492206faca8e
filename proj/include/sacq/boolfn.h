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

#ifndef SACQ_BOOLFN_H
#define SACQ_BOOLFN_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sacq {

inline constexpr int kMinVars = 1;
inline constexpr int kMaxVars = 24;
/// Exhaustive enumeration of all 2^(2^n) functions is refused above this.
inline constexpr int kMaxEnumerationVars = 3;

/// A point or direction of F2^n stored as a table index. Coordinate x1 is the
/// most significant of the n bits, so e_i is `1 << (n - i)`.
using Vec = std::uint32_t;

/// Index of the weight-1 direction e_i, 1 <= i <= n.
Vec unit_direction(int n, int i);

/// Parity of popcount(u & v), i.e. the F2 inner product u.x.
inline int dot_parity(Vec u, Vec v) {
    return __builtin_parity(u & v);
}

/// Truth table of an n-variable Boolean function F, with derived weight.
/// Immutable after construction.
class BooleanFunction {
   public:
    /// `table` must have exactly 2^n entries, each 0 or 1.
    BooleanFunction(int n, std::vector<std::uint8_t> table);

    static BooleanFunction constant(int n, bool value);

    /// Builds the table from a predicate `pred(x) -> bool` over all 2^n indices.
    template <typename Pred>
    static BooleanFunction from_predicate(int n, Pred &&pred) {
        check_vars(n);
        std::vector<std::uint8_t> t(std::size_t{1} << n);
        for (std::size_t x = 0; x < t.size(); ++x) {
            t[x] = pred(static_cast<Vec>(x)) ? 1 : 0;
        }
        return BooleanFunction(n, std::move(t));
    }

    int num_vars() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return table_.size();
    }
    std::span<const std::uint8_t> table() const noexcept {
        return table_;
    }
    std::uint64_t weight() const noexcept {
        return weight_;
    }

    /// F(x) in {0, 1}.
    int value(Vec x) const {
        return table_[x];
    }
    /// f(x) = (-1)^F(x).
    int character(Vec x) const {
        return 1 - 2 * table_[x];
    }

    std::string to_binary_string() const;
    /// Four table entries per hex digit, most significant first. Requires n >= 2.
    std::string to_hex_string() const;

    bool operator==(const BooleanFunction &other) const = default;

    /// Throws SizeLimitError unless kMinVars <= n <= kMaxVars.
    static void check_vars(int n);

   private:
    int n_;
    std::vector<std::uint8_t> table_;
    std::uint64_t weight_;
};

/// Where a function came from: a binary table, a hex table, or an ANF expression.
struct FunctionSource {
    enum class Kind { Binary, Hex, Anf };
    Kind kind;
    std::string text;
    /// Declared variable count. Inferred from the text when absent.
    std::optional<int> n;
};

BooleanFunction parse_binary(std::string_view bits, std::optional<int> n = std::nullopt);
/// Accepts an optional "0x" prefix.
BooleanFunction parse_hex(std::string_view hex, std::optional<int> n = std::nullopt);
/// Grammar: terms joined by '+' (XOR), factors joined by '*' (AND), factors
/// are "x1".."xn", "1", or "0". Whitespace is ignored. Without a declared n,
/// n is the largest variable index used.
BooleanFunction parse_anf(std::string_view expr, std::optional<int> n = std::nullopt);
BooleanFunction parse_function(const FunctionSource &source);

/// Truth-table file: "n=<k>" on the first line, then 2^k binary digits or a
/// "0x"-prefixed hex string on the second. Errors carry line and column.
BooleanFunction read_truth_table(std::istream &in);
BooleanFunction load_truth_table_file(const std::string &path);
void write_truth_table(std::ostream &out, const BooleanFunction &f, bool hex = false);

/// G(x) = F(x ^ c) ^ F(x).
BooleanFunction derivative(const BooleanFunction &f, Vec c);

/// 2^n - 2 wt(F), which equals the sum of f(x) over all x.
std::int64_t bias(const BooleanFunction &f);

/// Hamming distance between truth tables of equal arity.
std::uint64_t distance(const BooleanFunction &a, const BooleanFunction &b);

/// In-place unnormalized Walsh-Hadamard butterfly. `data.size()` must be a
/// power of two. Applying it twice multiplies by the length.
template <typename T>
void walsh_transform(std::span<T> data) {
    const std::size_t len = data.size();
    for (std::size_t half = 1; half < len; half <<= 1) {
        for (std::size_t block = 0; block < len; block += half << 1) {
            for (std::size_t k = block; k < block + half; ++k) {
                T a = data[k];
                T b = data[k + half];
                data[k] = a + b;
                data[k + half] = a - b;
            }
        }
    }
}

/// Normalized Fourier coefficients f^(w) = 2^-n sum_x f(x) (-1)^(w.x).
class FourierSpectrum {
   public:
    int num_vars() const noexcept {
        return n_;
    }
    std::span<const double> coeffs() const noexcept {
        return coeffs_;
    }
    double operator[](Vec w) const {
        return coeffs_[w];
    }
    /// Unnormalized integer coefficient 2^n f^(w).
    std::int64_t walsh(Vec w) const {
        return walsh_[w];
    }

   private:
    friend FourierSpectrum walsh_spectrum(const BooleanFunction &f);
    FourierSpectrum(int n, std::vector<std::int64_t> walsh);

    int n_;
    std::vector<std::int64_t> walsh_;
    std::vector<double> coeffs_;
};

/// Autocorrelations f~(a) = sum_x f(x) f(x ^ a).
class AutocorrSpectrum {
   public:
    int num_vars() const noexcept {
        return n_;
    }
    std::span<const std::int64_t> coeffs() const noexcept {
        return coeffs_;
    }
    std::int64_t operator[](Vec a) const {
        return coeffs_[a];
    }

   private:
    friend AutocorrSpectrum autocorrelation_spectrum(const BooleanFunction &f);
    AutocorrSpectrum(int n, std::vector<std::int64_t> coeffs);

    int n_;
    std::vector<std::int64_t> coeffs_;
};

/// Fast transform, O(n 2^n).
FourierSpectrum walsh_spectrum(const BooleanFunction &f);

/// Character values recovered from a spectrum by the inverse transform.
std::vector<double> inverse_walsh(const FourierSpectrum &spectrum);

/// Wiener-Khinchin route: transform, square, transform back, scale by 2^-n.
/// Runs in exact integer arithmetic.
AutocorrSpectrum autocorrelation_spectrum(const BooleanFunction &f);

/// Spectral mass on each side of coordinate i: sums of f^(w)^2 over w_i = 0 and w_i = 1.
struct SpectralHalves {
    double zero;
    double one;
};
/// Entry i-1 describes coordinate i.
std::vector<SpectralHalves> spectral_halves(const FourierSpectrum &spectrum);

struct SacReport {
    int n;
    /// directional[i-1] = f~(e_i).
    std::vector<std::int64_t> directional;
    /// Half the sum of |f~(e_i)|. Upper bound on the distance to a SAC function.
    std::int64_t epsilon_exact;
    bool is_sac;
};

SacReport sac_report(const BooleanFunction &f);

/// All 2^(2^n) functions, ordered by the integer whose bit x is F(x). n <= 3.
std::vector<BooleanFunction> enumerate_functions(int n);

struct DistanceBoundCase {
    BooleanFunction f;
    std::uint64_t distance;
    std::int64_t epsilon;
};

/// Exhaustive test of "distance to nearest SAC function <= epsilon_exact".
struct DistanceBoundAudit {
    int n;
    std::size_t functions_checked;
    std::size_t sac_functions;
    /// Functions whose distance equals the bound.
    std::size_t tight;
    std::vector<DistanceBoundCase> counterexamples;

    bool holds() const {
        return counterexamples.empty();
    }
};

DistanceBoundAudit audit_distance_bound(int n);

}  // namespace sacq

#endif
