"""Catalog of polytope families with their cube-generating data.

Every entry carries the polytope (points in the order the constructions
expect), the toric context, the monomial order and the gamma/step data,
built by iterating the zeta lift from a segment seed:

* ``segment:z``           the segment [0, z];
* ``box:d1,...,dn``       a parallelepiped (``square`` = box:1,1,
                          ``cube`` = box:1,1,1), constant-zeta lifts;
* ``simplex:n,d``         P_{n,d} = {d >= x_n >= ... >= x_1 >= 0},
                          lifts by zeta = d - x_last;
* ``triangle:e``          the 2D lift of [0, e] by zeta(a) = a;
* ``hirzebruch:b,e``      the trapezoid profile (0, 1, ..., 1) (b = 1);
* ``polygon:z0,...,ze``   any concave integer profile over [0, e].
"""

from dataclasses import dataclass

from .cubedata import CubeGenData, build_zeta_data, segment_data, validate
from .lattice import LatticePolytope, ZetaFunction
from .toricring import ToricContext


@dataclass
class CatalogEntry:
    name: str
    polytope: LatticePolytope
    data: CubeGenData

    def __post_init__(self):
        self.context = ToricContext(self.polytope)

    def gamma_override(self, i, j, value):
        """A copy of this entry with one gamma value corrupted (both
        orientations), for exercising verification failure paths."""
        gamma = dict(self.data.gamma)
        gamma[(i, j)] = gamma[(j, i)] = value
        data = CubeGenData(points=self.data.points, order=self.data.order,
                           gamma=gamma, steps=dict(self.data.steps),
                           lifts=self.data.lifts)
        return CatalogEntry(name=self.name + "(gamma-override)",
                            polytope=self.polytope, data=data)


def segment_entry(z):
    if z < 1:
        raise ValueError("segment length must be >= 1")
    P = LatticePolytope.from_vertices([(0,), (z,)], "colex")
    return CatalogEntry("segment:%d" % z, P, segment_data(z))


def _lift_chain(name, z, zeta_fns):
    P = LatticePolytope.from_vertices([(0,), (z,)], "colex")
    D = segment_data(z)
    for zf in zeta_fns:
        P, D = build_zeta_data(D, P, ZetaFunction({p: zf(p) for p in P.points}))
    return CatalogEntry(name, P, D)


def box_entry(ds):
    ds = tuple(int(d) for d in ds)
    if not ds or any(d < 1 for d in ds):
        raise ValueError("box sides must be positive")
    return _lift_chain("box:%s" % ",".join(map(str, ds)), ds[0],
                       [lambda p, d=d: d for d in ds[1:]])


def simplex_entry(n, d):
    if n < 1 or d < 1:
        raise ValueError("need n, d >= 1")
    return _lift_chain("simplex:%d,%d" % (n, d), d,
                       [lambda p: d - p[-1]] * (n - 1))


def polygon_entry(zetas, name=None):
    zetas = tuple(int(z) for z in zetas)
    diffs = [zetas[i] - zetas[i + 1] for i in range(len(zetas) - 1)]
    if any(diffs[i] > diffs[i + 1] for i in range(len(diffs) - 1)):
        raise ValueError("profile %s is not concave; not a polygon-family "
                         "instance" % (zetas,))
    name = name or "polygon:%s" % ",".join(map(str, zetas))
    return _lift_chain(name, len(zetas) - 1, [lambda p: zetas[p[0]]])


def triangle_entry(eta):
    return polygon_entry(tuple(range(eta + 1)), name="triangle:%d" % eta)


def hirzebruch_entry(b, eta):
    if not 1 <= b <= eta:
        raise ValueError("need 1 <= b <= eta")
    zetas = tuple(0 if i < b else 1 for i in range(eta + 1))
    return polygon_entry(zetas, name="hirzebruch:%d,%d" % (b, eta))


_SIMPLE = {"square": lambda: box_entry((1, 1)),
           "cube": lambda: box_entry((1, 1, 1))}


def get_entry(name):
    """Resolve a catalog name like 'segment:3' or 'box:2,1,1'."""
    name = name.strip()
    if name in _SIMPLE:
        return _SIMPLE[name]()
    if ":" not in name:
        raise KeyError("unknown catalog entry %r" % name)
    family, _, args = name.partition(":")
    args = args.replace("=", " ").replace("b ", "").replace("eta ", "")
    vals = [int(x.strip().split()[-1]) for x in args.split(",") if x.strip()]
    if family == "segment" and len(vals) == 1:
        return segment_entry(vals[0])
    if family == "box" and vals:
        return box_entry(vals)
    if family == "simplex" and len(vals) == 2:
        return simplex_entry(*vals)
    if family == "triangle" and len(vals) == 1:
        return triangle_entry(vals[0])
    if family == "hirzebruch" and len(vals) == 2:
        return hirzebruch_entry(*vals)
    if family == "polygon" and vals:
        return polygon_entry(vals)
    raise KeyError("unknown catalog entry %r" % name)


def default_catalog():
    """The entries exercised by the verification suites."""
    return [segment_entry(1), segment_entry(2), segment_entry(3),
            triangle_entry(2), hirzebruch_entry(1, 2),
            box_entry((1, 1)), box_entry((1, 1, 1)), box_entry((2, 1, 1)),
            simplex_entry(2, 2), simplex_entry(3, 1)]


def check_entry(entry):
    """Data validity for a catalog entry (empty list when sound)."""
    return validate(entry.data, entry.polytope)
