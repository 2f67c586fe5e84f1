#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nw/errors.hpp"

namespace nw {

// First row of a circulant (-1,1)-matrix of odd order n, packed into a word.
//
// Entry k lives in bit (n-1-k), set bit = +1.  Putting entry 0 in the top
// used bit makes numeric comparison of the words identical to lexicographic
// comparison of the rows with +1 > -1, which is what every canonicity rule
// here needs.  Orders are capped at 63 so a row always fits one uint64_t;
// everything the desk-scale searches and the published examples touch is
// n <= 59.
class CirculantRow {
  public:
    CirculantRow() : n_(1), bits_(1) {}

    CirculantRow(int n, std::uint64_t bits) : n_(n), bits_(bits) {
        check_order(n);
        bits_ &= mask();
    }

    static CirculantRow from_signs(const std::vector<int>& signs) {
        check_order(static_cast<int>(signs.size()));
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < signs.size(); ++k) {
            if (signs[k] != 1 && signs[k] != -1)
                throw NonUnitEntry("row entry must be +1 or -1, got " +
                                   std::to_string(signs[k]));
            bits = (bits << 1) | (signs[k] == 1 ? 1u : 0u);
        }
        return CirculantRow(static_cast<int>(signs.size()), bits);
    }

    static CirculantRow all_plus(int n) { return CirculantRow(n, ~0ull); }

    int order() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    std::uint64_t mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    int entry(int k) const { return (bits_ >> (n_ - 1 - k)) & 1 ? 1 : -1; }

    std::vector<int> signs() const {
        std::vector<int> out(n_);
        for (int k = 0; k < n_; ++k) out[k] = entry(k);
        return out;
    }

    int row_sum() const { return 2 * std::popcount(bits_) - n_; }

    // Cyclic shift S^j: entry k of the result is entry (k-j) mod n.
    CirculantRow shifted(int j) const {
        j %= n_;
        if (j < 0) j += n_;
        if (j == 0) return *this;
        std::uint64_t w = ((bits_ >> j) | (bits_ << (n_ - j))) & mask();
        return CirculantRow(n_, w);
    }

    CirculantRow negated() const { return CirculantRow(n_, bits_ ^ mask()); }

    // Entry k of the result is entry (n-k) mod n; equals the first row of
    // X^sigma for sigma: x -> -x, and fixes exactly the symmetric rows.
    CirculantRow reversed() const {
        std::uint64_t w = 0;
        for (int k = 0; k < n_; ++k)
            w |= ((bits_ >> (n_ - 1 - ((n_ - k) % n_))) & 1ull) << (n_ - 1 - k);
        return CirculantRow(n_, w);
    }

    bool is_symmetric() const { return bits_ == reversed().bits_; }

    // entries[k] == entries[n-k] for all k > 1; entries 1 and n-1 are free.
    bool is_almost_symmetric() const {
        std::uint64_t diff = bits_ ^ reversed().bits_;
        std::uint64_t allowed = 0;
        if (n_ > 1) allowed = (1ull << (n_ - 2)) | 1ull;  // entries 1 and n-1
        return (diff & ~allowed) == 0;
    }

    // Periodic autocorrelation p_k = sum_j e_j * e_{(j+k) mod n}.  Agreement
    // count via xor/popcount: p_k = n - 2*wt(w ^ rot_k(w)).
    int paf(int k) const {
        return n_ - 2 * std::popcount(bits_ ^ shifted(k).bits_);
    }

    std::vector<int> paf_vector() const {
        std::vector<int> p(n_);
        for (int k = 0; k < n_; ++k) p[k] = paf(k);
        return p;
    }

    // Lexicographic maximality over the 2n transforms {+-S^j}: exactly the
    // circulant signed permutations, so this is the C1 canonicity rule.
    bool is_shift_canonical() const {
        for (int j = 0; j < n_; ++j) {
            std::uint64_t v = shifted(j).bits_;
            if (v > bits_ || (v ^ mask()) > bits_) return false;
        }
        return true;
    }

    // Same rule restricted to the transforms that stay inside the
    // almost-symmetric family (the full maximum usually leaves it).
    bool is_shift_canonical_almost_symmetric() const {
        for (int j = 0; j < n_; ++j) {
            CirculantRow s = shifted(j);
            if (s.is_almost_symmetric() && s.bits_ > bits_) return false;
            CirculantRow ns = s.negated();
            if (ns.is_almost_symmetric() && ns.bits_ > bits_) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s(n_, '-');
        for (int k = 0; k < n_; ++k)
            if (entry(k) == 1) s[k] = '+';
        return s;
    }

    friend bool operator==(const CirculantRow& x, const CirculantRow& y) {
        return x.n_ == y.n_ && x.bits_ == y.bits_;
    }
    friend bool operator<(const CirculantRow& x, const CirculantRow& y) {
        return x.n_ != y.n_ ? x.n_ < y.n_ : x.bits_ < y.bits_;
    }

  private:
    static void check_order(int n) {
        if (n < 1 || n > 63)
            throw Error("order must be in [1, 63], got " + std::to_string(n));
        if (n % 2 == 0)
            throw EvenOrder("order must be odd, got " + std::to_string(n));
    }

    int n_;
    std::uint64_t bits_;
};

}  // namespace nw
