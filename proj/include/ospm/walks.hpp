#ifndef OSPM_WALKS_HPP
#define OSPM_WALKS_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include <ospm/errors.hpp>

namespace ospm
{

enum class Letter : std::uint8_t { s0, s1 };
enum class Family { A2, A2dagger };
enum class Specialization { t0, tinf };

inline const char *to_string(Letter s) { return s == Letter::s0 ? "s0" : "s1"; }
inline const char *to_string(Family f) { return f == Family::A2 ? "A2" : "A2dagger"; }
inline const char *to_string(Specialization s) { return s == Specialization::t0 ? "t0" : "tinf"; }

/// The element 2nX s1^b, sitting in the alcove (2n - b, 2n - b + 1).
struct AlcoveElement {
    int n = 0;
    int b = 0;

    int left() const { return 2 * n - b; }
    int wt() const { return n; }
    int d() const { return b; }

    static AlcoveElement from_left(int a)
    {
        const int b = ((a % 2) + 2) % 2;
        return {(a + b) / 2, b};
    }

    friend bool operator==(const AlcoveElement &, const AlcoveElement &) = default;
};

// Even walls carry s1, odd walls s0.
inline Letter wall_label(int wall) { return (wall % 2 == 0) ? Letter::s1 : Letter::s0; }

struct WalkWord {
    std::vector<Letter> letters;

    // (s1,s0)^n for target -n; s0,s1,...,s0 of length 2n-1 for target +n.
    static WalkWord for_target(int n)
    {
        WalkWord w;
        if (n < 0) {
            for (int i = 0; i < -n; ++i) {
                w.letters.push_back(Letter::s1);
                w.letters.push_back(Letter::s0);
            }
        } else {
            for (int i = 0; i < 2 * n - 1; ++i) w.letters.push_back(i % 2 == 0 ? Letter::s0 : Letter::s1);
        }
        return w;
    }

    std::size_t size() const { return letters.size(); }

    bool is_alternating() const
    {
        for (std::size_t i = 1; i < letters.size(); ++i) {
            if (letters[i] == letters[i - 1]) return false;
        }
        return true;
    }
};

struct AlcoveWalk {
    WalkWord word;
    std::vector<std::uint8_t> mask; // 1 = crossing, 0 = folding

    std::string mask_string() const
    {
        std::string s;
        for (auto b : mask) s += b ? '1' : '0';
        return s;
    }
};

/// Folded-step indices (1-based) split by letter and by sign.
struct WalkStats {
    AlcoveElement final;
    std::vector<int> J;
    std::vector<int> J0_pos, J0_neg, J_pos, J_neg;
    int leg = 0;
    int legprime = 0;
    int legprime_shifted = 0;
};

struct HWord {
    std::vector<std::uint8_t> h; // 1 = rightward, 2 = leftward

    std::size_t length() const { return h.empty() ? 0 : h.size() - 1; }

    std::string str() const
    {
        std::string s;
        for (auto x : h) s += static_cast<char>('0' + x);
        return s;
    }
};

/// Encodes the walk by final arrow directions; h0 is 2 for negative targets.
inline HWord to_hword(const AlcoveWalk &walk, int target_sign)
{
    HWord w;
    w.h.push_back(target_sign > 0 ? 1 : 2);
    for (auto b : walk.mask) {
        const std::uint8_t prev = w.h.back();
        w.h.push_back(b ? prev : static_cast<std::uint8_t>(3 - prev));
    }
    return w;
}

inline int x_weight(const HWord &w)
{
    int right = 0, left = 0;
    for (std::size_t i = 1; i < w.h.size(); ++i) (w.h[i] == 1 ? right : left) += 1;
    const int y = right - left + 1;
    return y >= 0 ? y / 2 : -((-y + 1) / 2);
}

// sum of j over h_{l-j} = 1, h_{l-j+1} = 2
inline int leg(const HWord &w)
{
    const int l = static_cast<int>(w.length());
    int s = 0;
    for (int j = 1; j <= l; ++j) {
        if (w.h[l - j] == 1 && w.h[l - j + 1] == 2) s += j;
    }
    return s;
}

// sum of j over h_{l-j} = 1, h_{l-j-1} = 2, j = 0..l-1, exactly as indexed
inline int legprime(const HWord &w)
{
    const int l = static_cast<int>(w.length());
    int s = 0;
    for (int j = 0; j < l; ++j) {
        if (w.h[l - j] == 1 && w.h[l - j - 1] == 2) s += j;
    }
    return s;
}

// sum of j over h_{l-j} = 2, h_{l-j+1} = 1: the same pattern read one position later
inline int legprime_shifted(const HWord &w)
{
    const int l = static_cast<int>(w.length());
    int s = 0;
    for (int j = 1; j <= l; ++j) {
        if (w.h[l - j] == 2 && w.h[l - j + 1] == 1) s += j;
    }
    return s;
}

inline int beta_degree(int j, int l)
{
    if (j < 1 || j > l) throw Error("beta_degree: step index out of range");
    return l - j + 1;
}

inline int target_sign_of(const WalkWord &w)
{
    return (!w.letters.empty() && w.letters.front() == Letter::s0) ? 1 : -1;
}

/// Walks the integer line from the alcove (0,1).
inline WalkStats traverse(const AlcoveWalk &walk)
{
    const auto &letters = walk.word.letters;
    if (walk.mask.size() != letters.size()) throw MalformedWalk("mask length differs from word length");
    if (!walk.word.is_alternating()) throw MalformedWalk("word is not alternating");

    WalkStats st;
    int a = 0;
    int dir = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const int step = static_cast<int>(i) + 1;
        const Letter s = letters[i];
        const int wall = wall_label(a) == s ? a : a + 1;
        if (wall_label(wall) != s) throw MalformedWalk("no wall with the step label");
        const int toward = wall == a ? -1 : 1;
        if (dir != 0 && toward != dir) throw MalformedWalk("step wall lies behind the current direction");
        if (walk.mask[i] > 1) throw MalformedWalk("mask entries must be 0 or 1");
        if (walk.mask[i] == 1) {
            a += toward;
            dir = toward;
        } else {
            dir = -toward;
            const bool positive = dir == 1;
            st.J.push_back(step);
            if (s == Letter::s0) (positive ? st.J0_pos : st.J0_neg).push_back(step);
            else (positive ? st.J_pos : st.J_neg).push_back(step);
        }
    }
    st.final = AlcoveElement::from_left(a);
    const HWord h = to_hword(walk, target_sign_of(walk.word));
    st.leg = leg(h);
    st.legprime = legprime(h);
    st.legprime_shifted = legprime_shifted(h);
    return st;
}

/// All 2^l walks for the target, masks in lexicographic order with 0 < 1.
inline std::vector<AlcoveWalk> enumerate_walks(int n)
{
    if (n == 0) return {AlcoveWalk{}};
    const WalkWord word = WalkWord::for_target(n);
    const std::size_t l = word.size();
    if (l >= 31) throw BoundExceeded();
    std::vector<AlcoveWalk> out;
    out.reserve(std::size_t{1} << l);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << l); ++code) {
        AlcoveWalk w{word, std::vector<std::uint8_t>(l)};
        for (std::size_t i = 0; i < l; ++i) w.mask[i] = (code >> (l - 1 - i)) & 1u;
        out.push_back(std::move(w));
    }
    return out;
}

inline bool qb_survives(const WalkStats &st, Family family, Specialization spec)
{
    const bool cut_positive = (family == Family::A2) == (spec == Specialization::t0);
    return cut_positive ? st.J0_pos.empty() : st.J0_neg.empty();
}

inline std::vector<AlcoveWalk> qb_filter(const std::vector<AlcoveWalk> &walks, Family family, Specialization spec)
{
    std::vector<AlcoveWalk> out;
    for (const auto &w : walks) {
        if (qb_survives(traverse(w), family, spec)) out.push_back(w);
    }
    return out;
}

} // namespace ospm

#endif
