#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qkforms/casimir_matrix.hpp"
#include "qkforms/matrix.hpp"
#include "qkforms/quaternionic.hpp"
#include "qkforms/rep_theory.hpp"

namespace qkforms {

enum class DecompositionStatus { OK, Ambiguous, Failed };

struct DecompositionEntry {
    RepLabel label;
    Rational j, c;
    long long weyl_dim = 0;      // dim Lam^{a,b}_0 E
    long long complex_dim = 0;   // (k+1) * weyl_dim
    long long multiplicity = 0;  // -1 when ambiguous
    long long eigenspace_dim = 0; // joint kernel dimension of its eigenpair class
};

struct DecompositionTable {
    int m = 0, p = 0;
    DecompositionStatus status = DecompositionStatus::OK;
    std::vector<DecompositionEntry> entries;
    long long total_dim = 0;      // C(4m, p)
    long long covered_dim = 0;    // sum of eigenspace dims over distinct eigenpairs
    std::string message;
    /// Labels that match every admissibility condition except a <= m
    /// (the generically expected summands that vanish at this rank).
    std::vector<RepLabel> excluded_by_rank;
    /// For ambiguous eigenpair classes, every consistent multiplicity vector.
    std::vector<std::string> ambiguity_notes;
};

namespace detail {

/// All nonnegative integer solutions of sum mult_i * dim_i = target.
inline void multiplicity_solutions(const std::vector<long long>& dims, long long target,
                                   std::vector<long long>& cur,
                                   std::vector<std::vector<long long>>& out, std::size_t idx = 0) {
    if (idx == dims.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (long long k = 0; k * dims[idx] <= target; ++k) {
        cur.push_back(k);
        multiplicity_solutions(dims, target - k * dims[idx], cur, out, idx + 1);
        cur.pop_back();
    }
}

} // namespace detail

/// Joint (J, C) eigenspace decomposition of Lambda^p over the admissibility
/// candidate set.  Eigenspace dimensions are exact kernel dimensions of the
/// stacked matrix [J - j I ; C - c I]; multiplicities solve the integer
/// system per eigenpair class.  Completeness demands the eigenspaces exhaust
/// C(4m, p).
inline DecompositionTable joint_eigenspaces(const OperatorFamily& fam, int p) {
    const auto& f = fam.frame;
    const int n = f.n;
    DecompositionTable table;
    table.m = f.m;
    table.p = p;
    table.total_dim = (long long)binomial(n, p);

    auto labels = admissible_labels(p, f.m);

    // labels passing every condition except a <= m (vanishing at this rank)
    for (int k = 0; k <= std::min(p, 4 * f.m - p); ++k)
        for (int a = f.m + 1; 2 * a <= std::min(p + k, 4 * f.m - p + k); ++a)
            for (int b = 0; b <= a; ++b) {
                if (2 * b > std::min(p - k, 4 * f.m - p - k)) continue;
                if (((k ^ p) & 1) || ((k ^ (a + b)) & 1)) continue;
                table.excluded_by_rank.push_back({k, a, b});
            }

    // group labels by eigenpair
    std::map<EigenPair, std::vector<RepLabel>> classes;
    for (const auto& l : labels) classes[eigenpair(l, p, f.m)].push_back(l);

    auto MJ = materialize(fam.op_J(), n, p, p);
    auto MC = materialize(fam.op_C(), n, p, p);
    const std::size_t N = MJ.matrix.cols();

    std::map<RepLabel, DecompositionEntry> results;
    for (const auto& [pair, members] : classes) {
        Matrix top = MJ.matrix;
        Matrix bottom = MC.matrix;
        for (std::size_t i = 0; i < N; ++i) {
            top.at(i, i) -= pair.j;
            bottom.at(i, i) -= pair.c;
        }
        long long kdim = (long long)kernel_dim(top.stack(bottom));
        table.covered_dim += kdim;

        std::vector<long long> dims;
        for (const auto& l : members) dims.push_back(l.dim(f.m));

        std::vector<std::vector<long long>> sols;
        std::vector<long long> cur;
        detail::multiplicity_solutions(dims, kdim, cur, sols);

        if (sols.empty()) {
            table.status = DecompositionStatus::Failed;
            table.message += "no multiplicity assignment for eigenpair (j=" + pair.j.str()
                           + ", c=" + pair.c.str() + ") with dim " + std::to_string(kdim) + "; ";
        }
        bool ambiguous = sols.size() > 1;
        if (ambiguous) {
            if (table.status == DecompositionStatus::OK) table.status = DecompositionStatus::Ambiguous;
            std::string note = "eigenpair (j=" + pair.j.str() + ", c=" + pair.c.str() + "): ";
            for (const auto& s : sols) {
                note += "{";
                for (std::size_t i = 0; i < s.size(); ++i)
                    note += members[i].str() + ":" + std::to_string(s[i]) + (i + 1 < s.size() ? ", " : "");
                note += "} ";
            }
            table.ambiguity_notes.push_back(note);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            DecompositionEntry e;
            e.label = members[i];
            e.j = pair.j;
            e.c = pair.c;
            e.weyl_dim = weyl_dimension(members[i].weight(f.m), f.m);
            e.complex_dim = members[i].dim(f.m);
            e.eigenspace_dim = kdim;
            e.multiplicity = sols.empty() ? 0 : (ambiguous ? -1 : sols[0][i]);
            results[members[i]] = e;
        }
    }

    if (table.covered_dim != table.total_dim) {
        table.status = DecompositionStatus::Failed;
        table.message += "completeness failed: covered " + std::to_string(table.covered_dim)
                       + " of " + std::to_string(table.total_dim) + "; ";
    }

    for (const auto& [l, e] : results) table.entries.push_back(e);
    std::sort(table.entries.begin(), table.entries.end(),
              [](const DecompositionEntry& a, const DecompositionEntry& b) { return a.label < b.label; });
    return table;
}

/// Normalization factors between the Lambda^2-normalized matrix Casimirs and
/// the closed-form Killing-normalized eigenvalues, verified on every joint
/// (J,C) eigenspace of Lambda^p:
///   sp(m):  Cas_matrix acts as -2(m+1) * c_label
///   sp(1):  Cas_matrix acts as -(4/m) * c_{Sym^k H} = -k(k+2)/(2m)
/// Eigenpair collisions are handled by annihilating the joint kernel with the
/// product of the per-label factors.
inline Report verify_normalizations(const OperatorFamily& fam, const SubalgebraBasis& spm,
                                    const SubalgebraBasis& sp1, int p) {
    const auto& f = fam.frame;
    const int n = f.n;
    Report rep("normalizations");

    auto labels = admissible_labels(p, f.m);
    std::map<EigenPair, std::vector<RepLabel>> classes;
    for (const auto& l : labels) classes[eigenpair(l, p, f.m)].push_back(l);

    auto MJ = materialize(fam.op_J(), n, p, p);
    auto MC = materialize(fam.op_C(), n, p, p);
    auto Mspm = dual_basis_casimir_matrix(spm, n, p);
    auto Msp1 = dual_basis_casimir_matrix(sp1, n, p);
    const std::size_t N = MJ.matrix.cols();

    for (const auto& [pair, members] : classes) {
        Matrix top = MJ.matrix, bottom = MC.matrix;
        for (std::size_t i = 0; i < N; ++i) {
            top.at(i, i) -= pair.j;
            bottom.at(i, i) -= pair.c;
        }
        auto kernel = nullspace(top.stack(bottom));
        if (kernel.empty()) continue;

        // kernel as a matrix of column vectors
        Matrix K(N, kernel.size());
        for (std::size_t c = 0; c < kernel.size(); ++c)
            for (std::size_t r = 0; r < N; ++r) K.at(r, c) = kernel[c][r];

        std::string who;
        for (const auto& l : members) who += l.str();

        // sp(m): product of (Cas - lambda_l I) over the class annihilates K
        Matrix acc = K;
        for (const auto& l : members) {
            Rational lam = Rational(-2 * (f.m + 1)) * casimir_spm_killing(l.weight(f.m), f.m);
            Matrix shifted = Mspm.matrix;
            for (std::size_t i = 0; i < N; ++i) shifted.at(i, i) -= lam;
            acc = shifted * acc;
        }
        bool ok = acc.is_zero();
        rep.add({"sp(m) factor -2(m+1) on " + who + " @p=" + std::to_string(p),
                 "matrix Casimir equals -2(m+1) x closed form on the eigenspace",
                 ok, ok ? "0" : "eigenspace not annihilated", ""});

        // sp(1): all class members share k (it is determined by j)
        int k = members.front().k;
        Rational lam1 = Rational(-4) * casimir_sp1_symH(k) / Rational(f.m);
        Matrix shifted = Msp1.matrix;
        for (std::size_t i = 0; i < N; ++i) shifted.at(i, i) -= lam1;
        bool ok1 = (shifted * K).is_zero();
        rep.add({"sp(1) factor -4/m on " + who + " @p=" + std::to_string(p),
                 "matrix Casimir equals -(4/m) x closed form on the eigenspace",
                 ok1, ok1 ? "0" : "eigenspace not annihilated", ""});

        // the J chain: 2m x sp(1) Casimir eigenvalue is -k(k+2)
        bool okj = Rational(2 * f.m) * lam1 == eigenvalue_J(k);
        rep.add({"2m x sp(1) value = -k(k+2) on " + who + " @p=" + std::to_string(p),
                 "J eigenvalue through the Casimir chain", okj, okj ? "0" : "chain broken", ""});
    }
    return rep;
}

} // namespace qkforms
