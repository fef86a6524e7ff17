"""Eigensolver against the numpy oracle, plus the spectrum conventions."""

import math
import random

import numpy as np
import pytest

from toughlab import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    degree_profile,
    join,
    join_laplacian_spectrum,
    laplacian_spectrum,
    adjacency_spectrum,
    normalized_laplacian_spectrum,
    spectral_summary,
    symmetric_eigenvalues,
)
from toughlab.formats import enumerate_labeled
from toughlab.spectra import laplacian_matrix

from _oracles import has_nontrivial_bipartite_component


def close(xs, ys, tol=1e-8):
    return len(xs) == len(ys) and all(abs(a - b) <= tol for a, b in zip(xs, ys))


def test_solver_fixed_points(petersen):
    assert close(symmetric_eigenvalues([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), [1, 1, 1])
    assert close(symmetric_eigenvalues([[0, 1], [1, 0]]), [1, -1])
    eigs = adjacency_spectrum(petersen)
    assert close(eigs, [3] + [1] * 5 + [-2] * 4)


def test_solver_against_numpy_oracle():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 12)
        raw = [[rng.uniform(-5, 5) for _ in range(n)] for _ in range(n)]
        mat = [[(raw[i][j] + raw[j][i]) / 2 for j in range(n)] for i in range(n)]
        want = sorted(np.linalg.eigvalsh(np.array(mat)), reverse=True)
        got = symmetric_eigenvalues(mat)
        # convergence target 1e-12 * initial Frobenius norm keeps the
        # eigenvalue error far inside the documented residual budget
        assert close(got, want, tol=1e-9)


def test_solver_input_validation():
    with pytest.raises(ValueError, match="symmetric"):
        symmetric_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(ValueError, match="square"):
        symmetric_eigenvalues([[0, 1]])
    with pytest.raises(ValueError):
        symmetric_eigenvalues([])
    assert symmetric_eigenvalues([[4.5]]) == [4.5]


def test_laplacian_examples(k4, claw, petersen):
    assert close(laplacian_spectrum(k4), [4, 4, 4, 0])
    assert close(laplacian_spectrum(claw), [4, 1, 1, 0])
    assert close(laplacian_spectrum(petersen), [5] * 4 + [2] * 5 + [0])


def test_normalized_examples(c4, petersen):
    assert close(normalized_laplacian_spectrum(c4), [2, 1, 1, 0])
    want = [5 / 3] * 4 + [2 / 3] * 5 + [0]
    assert close(normalized_laplacian_spectrum(petersen), want)
    lonely = disjoint_union(complete_graph(1), complete_graph(2))
    assert close(normalized_laplacian_spectrum(lonely), [2, 0, 0])


def test_summary_examples(petersen, c4, k4):
    s = spectral_summary(petersen)
    assert abs(s.xi - 2 / 3) <= 1e-8 and abs(s.lambda_reg - 2) <= 1e-8
    s = spectral_summary(c4)
    assert abs(s.xi - 1) <= 1e-8 and abs(s.lambda_reg - 2) <= 1e-8
    s = spectral_summary(k4)
    assert abs(s.xi - 1 / 3) <= 1e-8 and abs(s.lambda_reg - 1) <= 1e-8
    irregular = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        spectral_summary(Graph.from_edges(1, []))
    assert spectral_summary(irregular).lambda_reg is None


def test_exhaustive_spectrum_invariants():
    # every labeled graph on up to 6 vertices
    for n in range(2, 7):
        for g in enumerate_labeled(n):
            lap = laplacian_spectrum(g)
            norm = normalized_laplacian_spectrum(g)
            assert len(lap) == n and len(norm) == n
            assert abs(math.fsum(lap) - 2 * g.m) <= 1e-8
            assert abs(lap[-1]) <= 1e-8
            assert abs(norm[-1]) <= 1e-8
            assert all(-1e-8 <= x <= 2 + 1e-8 for x in norm)
            dmax, dmin, _ = degree_profile(g)
            if dmax == dmin and dmax > 0:
                adj = adjacency_spectrum(g)
                d = dmax
                for i in range(n):
                    assert abs(lap[i] - (d - adj[n - 1 - i])) <= 1e-8
                    assert abs(norm[i] - lap[i] / d) <= 1e-8


def test_top_normalized_eigenvalue_detects_bipartite_parts():
    for n in range(2, 6):
        for g in enumerate_labeled(n):
            if g.m == 0:
                continue
            top = normalized_laplacian_spectrum(g)[0]
            assert (abs(top - 2) <= 1e-7) == has_nontrivial_bipartite_component(g)


def test_join_spectrum_formula_examples():
    assert close(join_laplacian_spectrum([0.0], [0.0], 1, 1), [2, 0])
    got = join_laplacian_spectrum([2.0, 0.0], [0.0, 0.0, 0.0], 2, 3)
    assert close(got, [5, 5, 2, 2, 0])
    got = join_laplacian_spectrum([0.0, 0.0], [0.0, 0.0], 2, 2)
    assert close(got, [4, 2, 2, 0])


def test_join_spectrum_matches_numeric_small():
    for ng in range(1, 4):
        for g in enumerate_labeled(ng):
            mu_g = laplacian_spectrum(g)
            for nh in range(1, 4):
                for h in enumerate_labeled(nh):
                    mu_h = laplacian_spectrum(h)
                    want = laplacian_spectrum(join(g, h))
                    got = join_laplacian_spectrum(mu_g, mu_h, ng, nh)
                    assert close(got, want)


def test_join_spectrum_rejects_malformed():
    with pytest.raises(ValueError, match="end in zero"):
        join_laplacian_spectrum([2.0, 1.0], [0.0], 2, 1)
    with pytest.raises(ValueError, match="descending"):
        join_laplacian_spectrum([0.0, 2.0], [0.0], 2, 1)
    with pytest.raises(ValueError, match="exactly"):
        join_laplacian_spectrum([0.0], [0.0], 2, 1)


def test_eigenvalue_counts_with_multiplicity():
    g = cycle_graph(5)
    assert len(adjacency_spectrum(g)) == 5
    assert len(laplacian_spectrum(g)) == 5
    assert len(normalized_laplacian_spectrum(g)) == 5


def test_adjacency_trace_vanishes():
    for n in range(2, 5):
        for g in enumerate_labeled(n):
            assert abs(math.fsum(adjacency_spectrum(g))) <= 1e-9


def test_laplacian_matrix_rows_sum_to_zero(petersen):
    for row in laplacian_matrix(petersen):
        assert abs(sum(row)) <= 1e-12
