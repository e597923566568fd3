#include "rgh/homology.hpp"

#include <string>

#include "rgh/errors.hpp"
#include "rgh/parallel.hpp"
#include "rgh/snf.hpp"

namespace rgh {

const char* mode_name(HomologyMode mode) {
    return mode == HomologyMode::integer ? "integer" : "rational";
}

HomologyMode default_mode(const Signature& sig) {
    return sig.r > 0 ? HomologyMode::integer : HomologyMode::rational;
}

HomologyResult homology(const CellBasis& basis, const std::vector<BoundaryMatrix>& maps,
                        HomologyMode mode, int threads) {
    if (mode == HomologyMode::integer && basis.sig.r == 0)
        throw ModeError("integral homology for " + basis.sig.str() +
                        " is not defined: without boundary marked points some "
                        "cells carry orientation-reversing symmetries; use "
                        "rational coefficients");

    HomologyResult out;
    out.sig = basis.sig;
    out.mode = mode;
    out.cells = basis.counts_by_dimension();

    const int top = basis.max_dim();
    if (static_cast<int>(maps.size()) != std::max(0, top))
        throw InternalError("boundary maps do not cover the basis");

    std::vector<long> gens(top + 1 < 0 ? 0 : top + 1, 0);
    for (int d = 0; d <= top; ++d)
        gens[d] = static_cast<long>(generator_indices(basis, d).size());
    for (int d = 1; d <= top; ++d) {
        if (maps[d - 1].d != d || maps[d - 1].cols != gens[d] ||
            maps[d - 1].rows != gens[d - 1])
            throw InternalError("boundary map shapes disagree with the basis");
    }

    std::vector<std::vector<mpz_class>> factors(maps.size());
    parallel_for(maps.size(), threads,
                 [&](std::size_t i) { factors[i] = smith_normal_form(maps[i]); });

    for (int d = 0; d <= top; ++d) {
        const long rank_in = d >= 1 ? static_cast<long>(factors[d - 1].size()) : 0;
        const long rank_out = d < top ? static_cast<long>(factors[d].size()) : 0;
        const long b = gens[d] - rank_in - rank_out;
        if (b < 0) throw InternalError("negative Betti number");
        out.betti[d] = b;
        if (mode == HomologyMode::integer && d < top) {
            std::vector<mpz_class> tor;
            for (const auto& f : factors[d])
                if (f > 1) tor.push_back(f);
            if (!tor.empty()) out.torsion[d] = std::move(tor);
        }
    }

    for (const auto& [d, b] : out.betti) out.euler += (d % 2 == 0 ? b : -b);

    for (int d = 0; d <= top; ++d)
        for (const auto& cls : basis.strata[d]) {
            mpq_class w(1, cls.aut_order);
            out.euler_orbifold += d % 2 == 0 ? w : -w;
        }
    out.euler_orbifold.canonicalize();
    return out;
}

HomologyResult homology(const CellBasis& basis, HomologyMode mode, int threads) {
    return homology(basis, boundary_matrices(basis, threads), mode, threads);
}

std::pair<long long, mpq_class> euler_characteristics(const CellBasis& basis) {
    long long plain = 0;
    mpq_class orbifold = 0;
    for (int d = 0; d <= basis.max_dim(); ++d)
        for (const auto& cls : basis.strata[d]) {
            plain += d % 2 == 0 ? 1 : -1;
            mpq_class w(1, cls.aut_order);
            orbifold += d % 2 == 0 ? w : -w;
        }
    orbifold.canonicalize();
    return {plain, orbifold};
}

} // namespace rgh
