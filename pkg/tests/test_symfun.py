import itertools

import pytest

from arcspace.arcjets import a_r_dim, filtration_dims
from arcspace.catalog import get_entry
from arcspace.exactpoly import Poly
from arcspace.lattice import LatticePolytope
from arcspace.symfun import (SymContext, kernel_intersection_image,
                             omega_slice_dim, phi_vee, product_generator,
                             psi_bc_image_dim, psi_map, split_kappa,
                             supersym_context, supersym_generators,
                             is_supersymmetric, cancellation_substitute)
from arcspace.toricring import ToricContext, enumerate_R, reachable_cells


def curve_context():
    P = LatticePolytope.from_vertices([(0, 0), (1, 2), (2, 1)], "colex")
    return ToricContext(P)


def tvar(ctx, j, l, k=1):
    return Poly.variable(ctx.var("t%d" % j, l), k)


def test_phi_vee_power_sums_curve():
    # the displayed images for conv{(0,0),(1,2),(2,1)}, r = (1,1,1,1)
    ctx = curve_context()
    assert ctx.points == [(0, 0), (1, 1), (2, 1), (1, 2)]
    mp = phi_vee(ctx, (1, 1, 1, 1))
    tgt = mp.target
    for k in (1, 2, 3, 4):
        assert mp.apply_to_poly(mp.source.power_sum("w", k)) == \
            tvar(tgt, 1, 1, k) + tvar(tgt, 2, 1, k) + tvar(tgt, 3, 1, k) + \
            tvar(tgt, 4, 1, k)
        assert mp.apply_to_poly(mp.source.power_sum("s1", k)) == \
            tvar(tgt, 2, 1, k) + 2 * tvar(tgt, 3, 1, k) + tvar(tgt, 4, 1, k)
        assert mp.apply_to_poly(mp.source.power_sum("s2", k)) == \
            tvar(tgt, 2, 1, k) + tvar(tgt, 3, 1, k) + 2 * tvar(tgt, 4, 1, k)


def test_phi_vee_single_point():
    e = get_entry("segment:2")
    mp = phi_vee(e.context, (0, 0, 1))   # the point 2 alone
    tgt = mp.target
    for k in (1, 2, 3):
        assert mp.apply_to_poly(mp.source.power_sum("s1", k)) == \
            2 * tvar(tgt, 3, 1, k)
        assert mp.apply_to_poly(mp.source.power_sum("w", k)) == \
            tvar(tgt, 3, 1, k)


def test_phi_vee_veronese_pair():
    e = get_entry("segment:2")
    mp = phi_vee(e.context, (1, 0, 1))
    tgt = mp.target
    for k in (1, 2, 3):
        assert mp.apply_to_poly(mp.source.power_sum("w", k)) == \
            tvar(tgt, 1, 1, k) + tvar(tgt, 3, 1, k)
        assert mp.apply_to_poly(mp.source.power_sum("s1", k)) == \
            2 * tvar(tgt, 3, 1, k)


def test_phi_vee_power_sum_formula_catalog():
    # phi(p_k(s_i)) = sum_j alpha^j_i p_k(t_j) on sampled r with |r| <= 3
    for name in ["segment:2", "square", "triangle:2"]:
        e = get_entry(name)
        for L in (1, 2, 3):
            cells = reachable_cells(e.context, L)
            some = sorted(cells)[: 2]
            for abar in some:
                for r in cells[abar][:2]:
                    mp = phi_vee(e.context, r)
                    for i in range(e.context.n):
                        for k in (1, 2, 3, 4):
                            img = mp.apply_to_poly(
                                mp.source.power_sum("s%d" % (i + 1), k))
                            expect = Poly.zero()
                            for j, p in enumerate(e.context.points):
                                for c in range(p[i]):
                                    expect = expect + mp.target.power_sum(
                                        "t%d" % (j + 1), k)
                            assert img == expect


def test_images_are_symmetric():
    # images of orbit sums land in the symmetric subring of the target
    e = get_entry("segment:2")
    mp = phi_vee(e.context, (1, 0, 1))
    for d in range(4):
        for key in mp.source.slice_basis(d):
            img = mp.apply_to_poly(mp.source.orbit_sum(key))
            # poly_to_vector round-trips iff the image is symmetric
            vec = mp.target.poly_to_vector(img, d)
            rebuilt = Poly.zero()
            for tkey, c in vec.items():
                rebuilt = rebuilt + c * mp.target.orbit_sum(tkey)
            assert rebuilt == img


def test_kernel_intersection_empty_maps_full_image():
    e = get_entry("segment:2")
    tgt_map = phi_vee(e.context, (1, 0, 1))
    for d in range(4):
        sl = kernel_intersection_image([], tgt_map, d)
        assert sl.dim == a_r_dim(e.context, (1, 0, 1), d)


def test_kernel_intersection_product_element():
    e = get_entry("segment:2")
    smaller = phi_vee(e.context, (0, 2, 0))
    target = phi_vee(e.context, (1, 0, 1))
    sl = kernel_intersection_image([smaller], target, 1)
    gen = Poly.variable(target.target.var("t1", 1)) - \
        Poly.variable(target.target.var("t3", 1))
    assert sl.contains_poly(target.target, gen)
    assert sl.dim == 1


def test_dual_subquotient_matches_oracle():
    # dim of the image slice == filtration subquotient dim (L <= 2, d <= 4)
    for name in ["segment:2", "segment:3", "square"]:
        e = get_entry(name)
        for L in (1, 2):
            for abar, _ in sorted(reachable_cells(e.context, L).items()):
                cell = enumerate_R(e.context, abar, L, order=e.data.order)
                maps = [phi_vee(e.context, r) for r in cell]
                for d in range(5):
                    filt = filtration_dims(e.context, abar, L, d, e.data.order)
                    for idx in range(len(cell)):
                        sl = kernel_intersection_image(maps[:idx], maps[idx], d)
                        assert sl.dim == filt[idx][2], (name, abar, L, d, idx)


def test_inclusion_dual_dims():
    # dim phi_vee(Lambda) slice == dim A_r slice (graded dual of inclusion)
    for name in ["segment:3", "square"]:
        e = get_entry(name)
        for L in (1, 2):
            for abar, cell in sorted(reachable_cells(e.context, L).items()):
                for r in cell:
                    mp = phi_vee(e.context, r)
                    for d in range(5):
                        sl = kernel_intersection_image([], mp, d)
                        assert sl.dim == a_r_dim(e.context, r, d)


# ----------------------------------------------------------------------
# psi maps and the splitting lemma

def test_psi_map_unwinding_example():
    # m = 1, zeta_1 = 2, r = (1, 0, 1): s^{(1)}, s^{(2)} -> t_{1,2}^{(1)}
    mp = psi_map([2], {(1, 0): 1, (1, 1): 0, (1, 2): 1})
    assert mp.assign[("s", 1)] == ("t1_2", 1)
    assert mp.assign[("s", 2)] == ("t1_2", 1)
    assert mp.assign[("u1", 1)] == ("t1_0", 1)
    assert mp.assign[("u1", 2)] == ("t1_2", 1)


def test_psi_map_u_bijection():
    # u-variables biject onto the t-variables of their row; s-multiplicity j
    mp = psi_map([2, 1], {(1, 0): 1, (1, 1): 1, (1, 2): 0, (2, 0): 0, (2, 1): 2})
    u_images = [v for k, v in mp.assign.items() if k[0].startswith("u")]
    assert len(set(u_images)) == len(u_images)
    from collections import Counter
    s_counts = Counter(v for k, v in mp.assign.items() if k[0] == "s")
    for (label, l), c in s_counts.items():
        j = int(label.split("_")[1])
        assert c == j


def test_psi_index_ranges():
    with pytest.raises(ValueError):
        psi_map([1], {(1, 2): 1})


def pair_order(zetas):
    pairs = [(i, j) for i in range(1, len(zetas) + 1)
             for j in range(zetas[i - 1] + 1)]
    pairs.sort(key=lambda p: (p[1], p[0]))
    return pairs


def test_split_kappa_definition():
    # kappa((i,j),(i',j')) counts l < j' with (i,j) before (i',l); on a
    # single row it reduces to the segment exponent j' - j - 1
    order = pair_order([3])
    from arcspace.cubedata import gamma_segment
    for a in range(4):
        for b in range(a + 1, 4):
            assert split_kappa(order, (1, a), (1, b)) == gamma_segment(a, b)
    # two rows interleaved by (height, row): (1,0) < (2,0) < (1,1) < (2,1);
    # the values match the unit-square gamma table (diagonal pair 1, rest 0)
    order2 = pair_order([1, 1])
    assert split_kappa(order2, (1, 0), (2, 1)) == 1
    assert split_kappa(order2, (2, 0), (1, 1)) == 0
    assert split_kappa(order2, (1, 0), (2, 0)) == 0
    assert split_kappa(order2, (1, 1), (2, 1)) == 0


def all_r(zetas, a_i, a):
    rows = []
    for i, (ai, zi) in enumerate(zip(a_i, zetas), start=1):
        opts = []
        for comp in itertools.product(range(ai + 1), repeat=zi + 1):
            if sum(comp) == ai:
                opts.append({(i, j): c for j, c in enumerate(comp)})
        rows.append(opts)
    for combo in itertools.product(*rows):
        r = {}
        for d in combo:
            r.update(d)
        if sum(j * v for (_, j), v in r.items()) == a:
            yield r


@pytest.mark.parametrize("zetas", [(2,), (1, 1), (2, 1)])
def test_split_membership(zetas):
    # the product generator lands in the kernel-intersection image slice
    m = len(zetas)
    order = pair_order(zetas)
    for total in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(order, total):
            r = {}
            for p in combo:
                r[p] = r.get(p, 0) + 1
            a_i = [sum(r.get((i, j), 0) for j in range(zetas[i - 1] + 1))
                   for i in range(1, m + 1)]
            a = sum(j * v for (_, j), v in r.items())
            if a > 3:
                continue
            key = tuple(r.get(p, 0) for p in order)
            smaller = [rp for rp in all_r(zetas, a_i, a)
                       if tuple(rp.get(p, 0) for p in order) < key]
            target = psi_map(list(zetas), r)
            maps = [psi_map(list(zetas), rp) for rp in smaller]
            populated = [p for p in order if r.get(p, 0)]
            expo, gdeg = {}, 0
            for x, y in itertools.combinations(populated, 2):
                kappa = split_kappa(order, x, y)
                if kappa:
                    expo[("t%d_%d" % x, "t%d_%d" % y)] = kappa
                    gdeg += kappa * r[x] * r[y]
            gen = product_generator(target.target, expo)
            for d in range(gdeg, 4):
                sl = kernel_intersection_image(maps, target, d)
                for mk in target.target.slice_basis(d - gdeg):
                    assert sl.contains_poly(target.target,
                                            gen * target.target.orbit_sum(mk))


# ----------------------------------------------------------------------
# supersymmetric polynomials

def test_supersym_p_generator():
    p = supersym_generators(1, 1, 1)
    ctx = supersym_context(1, 1)
    assert p == Poly.variable(ctx.var("p", 1)) - Poly.variable(ctx.var("q", 1))
    assert cancellation_substitute(p, 1, 1).is_zero()


def test_supersym_h_generators():
    assert supersym_generators(1, 0, 0, kind="h") == Poly.constant(1)
    ctx = supersym_context(1, 0)
    assert supersym_generators(1, 0, 1, kind="h") == \
        -Poly.variable(ctx.var("p", 1))


def test_generators_are_supersymmetric():
    for b, c in [(1, 1), (2, 1), (2, 2)]:
        for k in (1, 2, 3):
            assert is_supersymmetric(supersym_generators(b, c, k), b, c)
            assert is_supersymmetric(
                supersym_generators(b, c, k, kind="h"), b, c)


def test_resultant_annihilated():
    ctx = supersym_context(2, 2)
    res = product_generator(ctx, {("p", "q"): 1})
    assert is_supersymmetric(res, 2, 2)
    sub = cancellation_substitute(res, 2, 2)
    # every monomial of the substituted polynomial carries Z, hence the
    # class in the smaller supersymmetric ring is zero
    assert all(any(v[0] == "Z" for v, _ in mono) for mono in sub.terms) \
        or sub.is_zero()


@pytest.mark.parametrize("bc", [(1, 1), (2, 1), (2, 2)])
def test_psi_bc_surjective(bc):
    b, c = bc
    for d in range(5):
        assert psi_bc_image_dim(b, c, d) == omega_slice_dim(b - 1, c - 1, d)
