#pragma once

// Finitely generated abelian groups by invariant factors.

#include <string>
#include <vector>

#include "qp/snf.hpp"

namespace qp {

struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion; // f_1 | f_2 | ... | f_r, each >= 2

    AbelianGroup() = default;
    AbelianGroup(int rank, std::vector<Int> tors) : free_rank(rank), torsion(std::move(tors)) {
        if (free_rank < 0) throw BadParamsError("negative free rank");
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw BadParamsError("invariant factor < 2");
            if (i > 0 && torsion[i] % torsion[i - 1] != 0)
                throw BadParamsError("invariant factors violate divisibility chain");
        }
    }

    static AbelianGroup trivial() { return AbelianGroup(); }
    static AbelianGroup cyclic(const Int& m) {
        if (m < 1) throw BadParamsError("cyclic group order must be positive");
        if (m == 1) return trivial();
        return AbelianGroup(0, {m});
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    bool is_cyclic() const { return free_rank == 0 && torsion.size() <= 1; }

    Int order() const {
        if (!is_finite()) throw BadParamsError("infinite group has no order");
        Int o(1);
        for (const Int& f : torsion) o *= f;
        return o;
    }

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        for (int i = 0; i < free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
        for (const Int& f : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + f.get_str();
        return s;
    }
};

// Quotient of Z^generators by the row span of `relations`.
inline AbelianGroup group_from_presentation(const IntMatrix& relations) {
    SnfResult snf = smith_normal_form(relations);
    int gens = relations.cols();
    int rank = 0;
    std::vector<Int> torsion;
    for (const Int& d : snf.invariant_factors) {
        if (d != 0) ++rank;
        if (d > 1) torsion.push_back(d);
    }
    return AbelianGroup(gens - rank, std::move(torsion));
}

} // namespace qp
