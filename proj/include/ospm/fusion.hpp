#ifndef OSPM_FUSION_HPP
#define OSPM_FUSION_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <ospm/errors.hpp>
#include <ospm/laurent.hpp>
#include <ospm/xpolynomial.hpp>

namespace ospm
{

using Rational = mpq_class;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

enum class Generator { e, f, h, g_plus, g_minus };

inline constexpr std::array<Generator, 5> all_generators{Generator::e, Generator::f, Generator::h, Generator::g_plus,
                                                         Generator::g_minus};

inline bool is_odd(Generator g) { return g == Generator::g_plus || g == Generator::g_minus; }

inline const char *to_string(Generator g)
{
    switch (g) {
    case Generator::e: return "e";
    case Generator::f: return "f";
    case Generator::h: return "h";
    case Generator::g_plus: return "g+";
    case Generator::g_minus: return "g-";
    }
    return "";
}

/// The 3-dimensional module on v_{-1}, v_0, v_1 (parities even, odd, even).
struct SuperRep {
    std::array<Matrix3, 5> m;
    std::array<int, 3> parity{0, 1, 0};

    const Matrix3 &operator[](Generator g) const { return m[static_cast<int>(g)]; }
    Matrix3 &operator[](Generator g) { return m[static_cast<int>(g)]; }
};

namespace detail
{

inline Matrix3 mat_mul(const Matrix3 &a, const Matrix3 &b)
{
    Matrix3 r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

inline Matrix3 mat_lin(const Rational &s, const Matrix3 &a, const Rational &t, const Matrix3 &b)
{
    Matrix3 r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r[i][j] = s * a[i][j] + t * b[i][j];
    }
    return r;
}

// [a, b] for at least one even argument, {a, b} for two odd ones.
inline Matrix3 super_bracket(const SuperRep &r, Generator a, Generator b)
{
    const Rational sign = is_odd(a) && is_odd(b) ? 1 : -1;
    return mat_lin(1, mat_mul(r[a], r[b]), sign, mat_mul(r[b], r[a]));
}

} // namespace detail

struct BracketRelation {
    Generator a;
    Generator b;
    Rational coefficient;
    std::optional<Generator> result; // nullopt means the bracket vanishes
    std::string text;
};

/// The defining brackets. The printed sign of [f, g+] is incompatible with
/// {g-, g-} = -2f and {g+, g-} = h under the super Jacobi identity; the
/// consistent sign -g- is used.
inline std::vector<BracketRelation> osp12_relations()
{
    using G = Generator;
    return {
        {G::e, G::f, 1, G::h, "[e,f]=h"},
        {G::h, G::e, 2, G::e, "[h,e]=2e"},
        {G::h, G::f, -2, G::f, "[h,f]=-2f"},
        {G::h, G::g_plus, 1, G::g_plus, "[h,g+]=g+"},
        {G::h, G::g_minus, -1, G::g_minus, "[h,g-]=-g-"},
        {G::g_plus, G::g_minus, 1, G::h, "{g+,g-}=h"},
        {G::g_plus, G::g_plus, 2, G::e, "{g+,g+}=2e"},
        {G::g_minus, G::g_minus, -2, G::f, "{g-,g-}=-2f"},
        {G::f, G::g_plus, -1, G::g_minus, "[f,g+]=-g-"},
        {G::e, G::g_minus, -1, G::g_plus, "[e,g-]=-g+"},
        {G::e, G::g_plus, 0, std::nullopt, "[e,g+]=0"},
        {G::f, G::g_minus, 0, std::nullopt, "[f,g-]=0"},
        {G::h, G::h, 0, std::nullopt, "[h,h]=0"},
    };
}

/// Throws RelationViolation naming the first bracket that fails.
inline void check_relations(const SuperRep &r)
{
    for (const auto &rel : osp12_relations()) {
        const Matrix3 lhs = detail::super_bracket(r, rel.a, rel.b);
        Matrix3 rhs{};
        if (rel.result) rhs = detail::mat_lin(rel.coefficient, r[*rel.result], 0, r[*rel.result]);
        if (lhs != rhs) throw RelationViolation(rel.text);
    }
    const Matrix3 &h = r[Generator::h];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j && h[i][j] != 0) throw RelationViolation("h is not diagonal");
        }
        if (h[i][i] != i - 1) throw RelationViolation("h spectrum differs from {-1,0,1}");
    }
}

/// g+ : v_{-1} -> a v_0 -> a b v_1 and g- : v_1 -> v_0 / b -> -v_{-1} / (a b);
/// e = (g+)^2, f = -(g-)^2. Any nonzero a, b give a valid module.
inline SuperRep build_rep(const Rational &a = 1, const Rational &b = 1)
{
    if (a == 0 || b == 0) throw Error("build_rep: scaling parameters must be nonzero");
    SuperRep r{};
    auto &gp = r[Generator::g_plus];
    auto &gm = r[Generator::g_minus];
    gp[1][0] = a;
    gp[2][1] = b;
    gm[1][2] = 1 / b;
    gm[0][1] = -1 / a;
    r[Generator::e] = detail::mat_mul(gp, gp);
    r[Generator::f] = detail::mat_lin(-1, detail::mat_mul(gm, gm), 0, gm);
    for (int i = 0; i < 3; ++i) r[Generator::h][i][i] = i - 1;
    check_relations(r);
    return r;
}

struct FusionResult {
    QXPolynomial character;
    long dimension = 0;
    std::vector<long> layer_dimensions;
};

namespace detail
{

// One weight space of V^{(x) n}: the tensor basis vectors of that weight.
struct WeightSpace {
    std::vector<int> members;
    std::map<int, int> position;
};

// Row echelon basis over Q; rows stay fully reduced against every pivot.
class Echelon
{
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    // Adds v if independent; returns whether it was.
    bool insert(std::vector<Rational> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (rows_[r][j] != 0) v[j] -= c * rows_[r][j];
            }
        }
        std::size_t p = 0;
        while (p < dim_ && v[p] == 0) ++p;
        if (p == dim_) return false;
        const Rational inv = 1 / v[p];
        for (auto &x : v) x *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = rows_[r][p];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (v[j] != 0) rows_[r][j] -= c * v[j];
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

struct WeightVector {
    int weight = 0;
    std::vector<Rational> coords; // over WeightSpace::members
};

class TensorPower
{
public:
    TensorPower(const SuperRep &rep, std::vector<Rational> points) : rep_(rep), points_(std::move(points))
    {
        n_ = static_cast<int>(points_.size());
        total_ = 1;
        for (int i = 0; i < n_; ++i) total_ *= 3;
        for (int idx = 0; idx < total_; ++idx) {
            const int w = weight_of(idx);
            auto &ws = spaces_[w];
            ws.position[idx] = static_cast<int>(ws.members.size());
            ws.members.push_back(idx);
        }
    }

    int n() const { return n_; }
    int total() const { return total_; }
    const std::map<int, WeightSpace> &spaces() const { return spaces_; }

    int digit(int idx, int i) const
    {
        for (int j = n_ - 1; j > i; --j) idx /= 3;
        return idx % 3;
    }
    int weight_of(int idx) const
    {
        int w = 0;
        for (int i = 0; i < n_; ++i) w += digit(idx, i) - 1;
        return w;
    }

    WeightVector cyclic() const
    {
        const int w = -n_;
        WeightVector v{w, std::vector<Rational>(spaces_.at(w).members.size())};
        v.coords[spaces_.at(w).position.at(0)] = 1;
        return v;
    }

    static int weight_change(Generator g)
    {
        switch (g) {
        case Generator::e: return 2;
        case Generator::f: return -2;
        case Generator::h: return 0;
        case Generator::g_plus: return 1;
        case Generator::g_minus: return -1;
        }
        return 0;
    }

    // sum_i z_i^k X^{(i)}, odd generators picking up the Koszul sign of the
    // factors to their left. Returns nullopt when the image leaves the module.
    std::optional<WeightVector> apply(Generator g, int k, const WeightVector &v) const
    {
        const int w = v.weight + weight_change(g);
        auto it = spaces_.find(w);
        if (it == spaces_.end()) return std::nullopt;
        const WeightSpace &src = spaces_.at(v.weight);
        const WeightSpace &dst = it->second;
        WeightVector out{w, std::vector<Rational>(dst.members.size())};
        const Matrix3 &m = rep_[g];
        std::vector<Rational> zk(n_);
        for (int i = 0; i < n_; ++i) {
            mpq_class p = 1;
            for (int j = 0; j < k; ++j) p *= points_[i];
            zk[i] = p;
        }
        int place = 1;
        std::vector<int> stride(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            stride[i] = place;
            place *= 3;
        }
        for (std::size_t c = 0; c < src.members.size(); ++c) {
            if (v.coords[c] == 0) continue;
            const int idx = src.members[c];
            int left_parity = 0;
            for (int i = 0; i < n_; ++i) {
                const int d = digit(idx, i);
                for (int r = 0; r < 3; ++r) {
                    if (m[r][d] == 0) continue;
                    Rational coeff = v.coords[c] * m[r][d] * zk[i];
                    if (is_odd(g) && left_parity) coeff = -coeff;
                    const int target = idx + (r - d) * stride[i];
                    out.coords[dst.position.at(target)] += coeff;
                }
                left_parity ^= rep_.parity[d];
            }
        }
        return out;
    }

private:
    const SuperRep &rep_;
    std::vector<Rational> points_;
    int n_ = 0;
    int total_ = 1;
    std::map<int, WeightSpace> spaces_;
};

} // namespace detail

/// Graded character of the fusion product of n evaluation modules at the
/// given points, via the degree filtration of the cyclic vector v_{-1}^{(x) n}.
/// Twisted: even generators act only in even t-degree, odd ones in odd degree.
inline FusionResult fusion_character(const std::vector<Rational> &points, bool twisted,
                                     const SuperRep &rep = build_rep(), int max_n = 4)
{
    const int n = static_cast<int>(points.size());
    if (n > max_n) throw BoundExceeded("fusion builds are limited to n <= " + std::to_string(max_n));
    FusionResult res;
    if (n == 0) {
        res.character = 1;
        res.dimension = 1;
        res.layer_dimensions = {1};
        return res;
    }
    detail::TensorPower tp(rep, points);
    const int K = twisted ? 2 * n + 1 : 2 * n;
    std::map<int, detail::Echelon> span;
    for (const auto &[w, ws] : tp.spaces()) span.emplace(w, detail::Echelon(ws.members.size()));

    std::vector<std::vector<detail::WeightVector>> layers;
    long dim = 0;
    auto acts = [twisted](Generator g, int k) { return !twisted || (is_odd(g) == (k % 2 == 1)); };

    // Closes `fresh` under the degree-0 generators, keeping only independent vectors.
    auto close_degree0 = [&](std::vector<detail::WeightVector> candidates) {
        std::vector<detail::WeightVector> fresh;
        std::vector<detail::WeightVector> queue = std::move(candidates);
        while (!queue.empty()) {
            std::vector<detail::WeightVector> next;
            for (auto &v : queue) {
                if (!span.at(v.weight).insert(v.coords)) continue;
                ++dim;
                for (Generator g : all_generators) {
                    if (!acts(g, 0)) continue;
                    if (auto u = tp.apply(g, 0, v)) next.push_back(std::move(*u));
                }
                fresh.push_back(std::move(v));
            }
            queue = std::move(next);
        }
        return fresh;
    };

    layers.push_back(close_degree0({tp.cyclic()}));
    int idle = 0;
    const int safety = 4 * n * n + 4 * K + 8;
    for (int s = 1; dim < tp.total(); ++s) {
        if (s > safety) throw BoundExceeded("fusion filtration did not stabilise");
        std::vector<detail::WeightVector> candidates;
        for (int k = 1; k <= K && k <= s; ++k) {
            for (const auto &u : layers[s - k]) {
                for (Generator g : all_generators) {
                    if (!acts(g, k)) continue;
                    if (auto img = tp.apply(g, k, u)) candidates.push_back(std::move(*img));
                }
            }
        }
        layers.push_back(close_degree0(std::move(candidates)));
        idle = layers.back().empty() ? idle + 1 : 0;
        if (idle >= K) throw NotCyclic(dim, tp.total());
    }

    for (std::size_t s = 0; s < layers.size(); ++s) {
        res.layer_dimensions.push_back(static_cast<long>(layers[s].size()));
        for (const auto &v : layers[s]) res.character.add_term(v.weight, q_power(static_cast<int>(s)));
    }
    res.dimension = dim;
    return res;
}

} // namespace ospm

#endif
