"""The fifteen plane transformations and their actions.

Each unordered coordinate pair names a plane; exponentiating the
corresponding gamma product with a half angle gives the 4x4 group
element.  An element acts on P by conjugation, equivalently on X by a
two-sided 2x2 product, and induces a real 6x6 coordinate map that
preserves the metric.  A plane whose gamma product squares to -I
rotates (cos/sin); one squaring to +I boosts (cosh/sinh).

The module also carries a bundled reference transcription of all
fifteen matrices in closed form.  ``appendix_check`` diffs that table
against recomputation and documents any transcription discrepancy
instead of failing, so the recomputed matrices stay the ground truth.
"""

import math
import random

import numpy as np

from .algebra import ONE, UNIT
from .clifford import (
    COORDS,
    METRIC,
    Vector6,
    build_P,
    extract_coords,
    gamma,
    metric_form,
)
from .matrices import TensorMatrix
from .report import Report

__all__ = [
    "PLANES",
    "TRANSLATION_NAMES",
    "canonical_plane",
    "plane_kind",
    "generator",
    "act_on_P",
    "act_on_X",
    "act_on_vector",
    "so6_matrix",
    "so6_step",
    "metric6",
    "project_vector",
    "pi_project",
    "verify_properties",
    "verify_group",
    "REFERENCE_GENERATOR_TABLE",
    "build_reference",
    "appendix_check",
]

# Canonical plane names, in the order of the bundled reference table.
PLANES = (
    "xy",
    "yz",
    "zx",
    "qx",
    "qy",
    "qz",
    "tp",
    "tx",
    "ty",
    "tz",
    "tq",
    "px",
    "py",
    "pz",
    "pq",
)

# Names accepted by transform words in addition to the planes.
TRANSLATION_NAMES = ("ax", "ay", "az", "at", "bx", "by", "bz", "bt")

_CANONICAL = {}
for _name in PLANES:
    _CANONICAL[_name] = (_name, 1)
    _CANONICAL[_name[::-1]] = (_name, -1)


def canonical_plane(plane):
    """Resolve a plane given as 'ab' or ('a','b') to (canonical name, orientation).

    Orientation is +1 when the given order matches the canonical name
    and -1 when reversed; reversing the pair negates the angle.
    """
    if not isinstance(plane, str):
        a, b = plane
        plane = "%s%s" % (a, b)
    got = _CANONICAL.get(plane)
    if got is None:
        raise ValueError("unknown plane %r" % (plane,))
    return got


_plane_cache = {}


def _plane_data(name):
    """(gamma product, kind, upper 2x2 block, lower 2x2 block) for a canonical name."""
    data = _plane_cache.get(name)
    if data is None:
        a, b = name[0], name[1]
        gp = gamma(a) @ gamma(b)
        sq = gp @ gp
        ident = TensorMatrix.identity(4)
        if sq == ident:
            kind = "boost"
        elif sq == -ident:
            kind = "rotation"
        else:
            raise AssertionError("gamma product square is not +I or -I")
        tl, tr, bl, br = gp.blocks()
        if not (tr.is_zero() and bl.is_zero()):
            raise AssertionError("gamma product is not block diagonal")
        data = (gp, kind, tl, br)
        _plane_cache[name] = data
    return data


def plane_kind(plane):
    """'rotation' or 'boost', by the exact square of the gamma product."""
    name, _ = canonical_plane(plane)
    return _plane_data(name)[1]


def _cs(kind, alpha):
    if kind == "boost":
        return math.cosh(alpha), math.sinh(alpha)
    return math.cos(alpha), math.sin(alpha)


def generator(plane, theta):
    """The 4x4 group element for the plane at angle theta.

    Closed form c(theta/2) I + s(theta/2) (gamma product), with
    cos/sin for rotation planes and cosh/sinh for boost planes.
    theta = 0 gives the identity; a = b is rejected.
    """
    name, orient = canonical_plane(plane)
    gp, kind, _, _ = _plane_data(name)
    c, s = _cs(kind, orient * theta / 2)
    return TensorMatrix.identity(4).scale(c) + gp.scale(s)


def _step_factors(plane, theta):
    """The (left, right) 2x2 factors of one conjugation step on X."""
    name, orient = canonical_plane(plane)
    _, kind, tl, br = _plane_data(name)
    half = orient * theta / 2
    c, s = _cs(kind, half)
    ident = TensorMatrix.identity(2)
    left = ident.scale(c) + tl.scale(s)
    right = ident.scale(c) + br.scale(-s)
    return left, right


def act_on_P(word, p, tol=1e-9):
    """Conjugate p by each (plane, angle) entry in sequence.

    The result must stay inside the span of the gammas; a residual
    beyond tol (relative to the matrix scale) raises ValueError.
    """
    for plane, theta in word:
        m = generator(plane, theta)
        m_inv = generator(plane, -theta)
        p = (m @ p) @ m_inv
    extract_coords(p, tol=tol)
    return p


def act_on_X(word, x, tol=1e-9):
    """The equivalent 2x2 action: one two-sided product per word entry.

    Hermiticity with respect to the complex unit is checked on the
    result; losing it beyond tol raises ValueError.
    """
    for plane, theta in word:
        left, right = _step_factors(plane, theta)
        x = (left @ x) @ right
    if not x.is_c_hermitian(tol * max(1, x.max_abs())):
        raise ValueError("2x2 action lost Hermiticity beyond tolerance")
    return x


def act_on_vector(word, v, tol=1e-9):
    """Coordinates of the conjugated embedding of v."""
    return extract_coords(act_on_P(word, build_P(v), tol=tol), tol=tol)


def so6_matrix(word, tol=1e-9):
    """The real 6x6 matrix R with act_on_vector(word, v) = R v.

    Computed by acting on the six coordinate basis vectors.
    """
    cols = []
    for m in COORDS:
        img = act_on_vector(word, Vector6.basis(m), tol=tol)
        cols.append([float(c) for c in img.as_tuple()])
    return np.array(cols, dtype=float).T


def so6_step(plane, theta):
    """Closed-form 6x6 matrix of a single plane transformation.

    Equals so6_matrix([(plane, theta)]); kept separate so long words
    can be composed without rebuilding the conjugation each time.
    """
    name, orient = canonical_plane(plane)
    kind = _plane_data(name)[1]
    a, b = name[0], name[1]
    c, s = _cs(kind, orient * theta)
    ia, ib = COORDS.index(a), COORDS.index(b)
    r = np.eye(6)
    r[ia, ia] = c
    r[ia, ib] = s * METRIC[b]
    r[ib, ib] = c
    r[ib, ia] = -s * METRIC[a]
    return r


def metric6():
    """diag of the metric in coordinate order."""
    return np.diag([float(METRIC[m]) for m in COORDS])


def project_vector(v):
    """Zero the p and q coordinates."""
    return Vector6(x=v.x, y=v.y, z=v.z, t=v.t)


def pi_project(p, tol=1e-9):
    """Drop the p and q components of a matrix in the span of the gammas."""
    return build_P(project_vector(extract_coords(p, tol=tol)))


def verify_properties(config=None):
    """Exact checks of the five structural identities of the gamma products."""
    report = Report("properties", dict(config or {}))
    ident = TensorMatrix.identity(4)
    prods = {}
    for a in COORDS:
        for b in COORDS:
            if a != b:
                prods[(a, b)] = gamma(a) @ gamma(b)

    for a in COORDS:
        sq = gamma(a) @ gamma(a)
        expected = ident.scale(METRIC[a])
        report.add(
            "prop1[%s]" % a,
            sq == expected,
            "(%+d)*I" % METRIC[a],
            "match" if sq == expected else "mismatch",
        )

    for a in COORDS:
        for b in COORDS:
            if b == a:
                continue
            ab = prods[(a, b)]
            for c in COORDS:
                if c == a or c == b:
                    continue
                lhs = ab @ gamma(c)
                rhs = gamma(c) @ ab
                report.add(
                    "prop2[%s,%s,%s]" % (a, b, c),
                    lhs == rhs,
                    "commute",
                    "match" if lhs == rhs else "mismatch",
                )

    for a in COORDS:
        for b in COORDS:
            if b == a:
                continue
            ab = prods[(a, b)]
            lhs3 = ab @ gamma(b)
            rhs3 = gamma(a).scale(METRIC[b])
            report.add(
                "prop3[%s,%s]" % (a, b),
                lhs3 == rhs3,
                "(%+d)*gamma(%s)" % (METRIC[b], a),
                "match" if lhs3 == rhs3 else "mismatch",
            )
            lhs4 = ab @ gamma(a)
            rhs4 = gamma(b).scale(-METRIC[a])
            report.add(
                "prop4[%s,%s]" % (a, b),
                lhs4 == rhs4,
                "(%+d)*gamma(%s)" % (-METRIC[a], b),
                "match" if lhs4 == rhs4 else "mismatch",
            )
            lhs5 = ab @ ab
            sign5 = -METRIC[a] * METRIC[b]
            rhs5 = ident.scale(sign5)
            report.add(
                "prop5[%s,%s]" % (a, b),
                lhs5 == rhs5,
                "(%+d)*I" % sign5,
                "match" if lhs5 == rhs5 else "mismatch",
            )
    return report


def _random_word(rng, max_len, angle_span):
    length = rng.randint(0, max_len)
    return [
        (rng.choice(PLANES), rng.uniform(-angle_span, angle_span))
        for _ in range(length)
    ]


def _random_vector(rng, span=1.0):
    return Vector6(*(rng.uniform(-span, span) for _ in range(6)))


def compose_so6(word):
    """Product of single-step 6x6 matrices, later steps applied on the left."""
    r = np.eye(6)
    for plane, theta in word:
        r = so6_step(plane, theta) @ r
    return r


def verify_group(config=None):
    """Structural and seeded statistical checks of the group actions."""
    config = dict(config or {})
    tol = config.get("tolerance", 1e-12)
    seed = config.get("seed", 42)
    samples = config.get("samples", 1000)
    rng = random.Random(seed)
    report = Report("group", config)
    ident4 = TensorMatrix.identity(4)
    g6 = metric6()

    for name in PLANES:
        a, b = name[0], name[1]
        expected_kind = "boost" if -METRIC[a] * METRIC[b] > 0 else "rotation"
        actual_kind = plane_kind(name)
        report.add(
            "kind[%s]" % name,
            actual_kind == expected_kind,
            expected_kind,
            actual_kind,
            "sign of the exact gamma-product square",
        )

    for name in PLANES:
        prod = generator(name, 0.77) @ generator(name, -0.77)
        dev = (prod - ident4).max_abs()
        report.add(
            "inverse[%s]" % name,
            dev <= tol,
            "<= %g" % tol,
            repr(dev),
            "generator(theta) @ generator(-theta) vs identity",
        )

    for name in PLANES:
        dev = float(
            np.max(np.abs(so6_step(name, 0.37) - so6_matrix([(name, 0.37)])))
        )
        report.add(
            "step-vs-definition[%s]" % name,
            dev <= tol,
            "<= %g" % tol,
            repr(dev),
            "closed-form 6x6 step vs action on basis vectors",
        )

    comp_dev = 0.0
    for _ in range(12):
        w1 = _random_word(rng, 3, 1.0)
        w2 = _random_word(rng, 3, 1.0)
        lhs = so6_matrix(w1 + w2)
        rhs = so6_matrix(w2) @ so6_matrix(w1)
        comp_dev = max(comp_dev, float(np.max(np.abs(lhs - rhs))))
    report.add(
        "composition",
        comp_dev <= tol,
        "<= %g" % tol,
        repr(comp_dev),
        "so6(w1 then w2) vs so6(w2) @ so6(w1), 12 seeded word pairs",
    )

    qform_dev = 0.0
    n_heavy = max(1, samples // 20)
    for _ in range(n_heavy):
        v = _random_vector(rng)
        word = _random_word(rng, 5, 0.6)
        img = act_on_vector(word, v)
        qform_dev = max(qform_dev, abs(metric_form(img) - metric_form(v)))
    report.add(
        "invariance[qform]",
        qform_dev <= 1e-9,
        "<= 1e-09",
        repr(qform_dev),
        "metric square preserved along %d seeded conjugation words" % n_heavy,
    )

    metric_dev = 0.0
    det_dev = 0.0
    for _ in range(samples):
        word = _random_word(rng, 5, 0.6)
        r = compose_so6(word)
        metric_dev = max(metric_dev, float(np.max(np.abs(r.T @ g6 @ r - g6))))
        det_dev = max(det_dev, abs(float(np.linalg.det(r)) - 1.0))
    report.add(
        "invariance[metric]",
        metric_dev <= tol,
        "<= %g" % tol,
        repr(metric_dev),
        "R^T G R vs G over %d seeded words" % samples,
    )
    report.add(
        "invariance[det]",
        det_dev <= tol,
        "<= %g" % tol,
        repr(det_dev),
        "det R vs 1 over %d seeded words" % samples,
    )

    for m in ("p", "q"):
        proj = pi_project(gamma(m))
        report.add(
            "pi[gamma_%s]" % m,
            proj.is_zero(),
            "0",
            "0" if proj.is_zero() else "nonzero",
            "projection drops the %s component" % m,
        )

    eta = np.diag([1.0, 1.0, 1.0, -1.0])
    lorentz_planes = ("xy", "yz", "zx", "tx", "ty", "tz")
    idx4 = [COORDS.index(m) for m in ("x", "y", "z", "t")]
    for name in lorentz_planes:
        r6 = so6_step(name, 0.83)
        r4 = r6[np.ix_(idx4, idx4)]
        dev = float(np.max(np.abs(r4.T @ eta @ r4 - eta)))
        report.add(
            "lorentz[%s]" % name,
            dev <= tol,
            "<= %g" % tol,
            repr(dev),
            "restricted 4x4 block preserves the (+,+,+,-) form",
        )

    m_pq = generator("pq", 0.6)
    for name in lorentz_planes:
        m_ab = generator(name, 0.9)
        dev = ((m_pq @ m_ab) - (m_ab @ m_pq)).max_abs()
        report.add(
            "pq-commutes[%s]" % name,
            dev <= tol,
            "<= %g" % tol,
            repr(dev),
            "dilation generator commutes with the Lorentz planes",
        )

    return report


# Reference transcription of the fifteen matrices in closed form.
# Each cell is (i, j, c, s, unit): the entry c*c(phi/2) + s*s(phi/2)*unit
# with (c, s) = (cos, sin) for rotation planes and (cosh, sinh) for
# boost planes.  Unlisted cells are zero.  Kept as data, not code, so a
# transcription can be diffed against recomputation.
REFERENCE_GENERATOR_TABLE = {
    "xy": (
        (0, 0, 1, 1, "l"),
        (1, 1, 1, -1, "l"),
        (2, 2, 1, 1, "l"),
        (3, 3, 1, -1, "l"),
    ),
    "yz": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, 1, "l"),
        (1, 0, 0, 1, "l"),
        (2, 3, 0, 1, "l"),
        (3, 2, 0, 1, "l"),
    ),
    "zx": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, 1, "1"),
        (1, 0, 0, -1, "1"),
        (2, 3, 0, 1, "1"),
        (3, 2, 0, -1, "1"),
    ),
    "qx": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, 1, "K"),
        (1, 0, 0, 1, "K"),
        (2, 3, 0, -1, "K"),
        (3, 2, 0, -1, "K"),
    ),
    "qy": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, -1, "Kl"),
        (1, 0, 0, 1, "Kl"),
        (2, 3, 0, 1, "Kl"),
        (3, 2, 0, -1, "Kl"),
    ),
    "qz": (
        (0, 0, 1, 1, "K"),
        (1, 1, 1, -1, "K"),
        (2, 2, 1, -1, "K"),
        (3, 3, 1, 1, "K"),
    ),
    "tp": (
        (0, 0, 1, 1, "K"),
        (1, 1, 1, 1, "K"),
        (2, 2, 1, 1, "K"),
        (3, 3, 1, 1, "K"),
    ),
    "tx": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, 1, "L"),
        (1, 0, 0, 1, "L"),
        (2, 3, 0, -1, "L"),
        (3, 2, 0, -1, "L"),
    ),
    "ty": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, -1, "Ll"),
        (1, 0, 0, 1, "Ll"),
        (2, 3, 0, -1, "Ll"),
        (3, 2, 0, 1, "Ll"),
    ),
    "tz": (
        (0, 0, 1, 1, "L"),
        (1, 1, 1, -1, "L"),
        (2, 2, 1, -1, "L"),
        (3, 3, 1, 1, "L"),
    ),
    "tq": (
        (0, 0, 1, 1, "KL"),
        (1, 1, 1, 1, "KL"),
        (2, 2, 1, 1, "KL"),
        (3, 3, 1, 1, "KL"),
    ),
    "px": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, 1, "KL"),
        (1, 0, 0, 1, "KL"),
        (2, 3, 0, -1, "KL"),
        (3, 2, 0, -1, "KL"),
    ),
    "py": (
        (0, 0, 1, 0, "1"),
        (1, 1, 1, 0, "1"),
        (2, 2, 1, 0, "1"),
        (3, 3, 1, 0, "1"),
        (0, 1, 0, -1, "KLl"),
        (1, 0, 0, 1, "KLl"),
        (2, 3, 0, 1, "KLl"),
        (3, 2, 0, -1, "KLl"),
    ),
    "pz": (
        (0, 0, 1, 1, "KL"),
        (1, 1, 1, -1, "KL"),
        (2, 2, 1, -1, "KL"),
        (3, 3, 1, 1, "KL"),
    ),
    "pq": (
        (0, 0, 1, -1, "L"),
        (1, 1, 1, -1, "L"),
        (2, 2, 1, -1, "L"),
        (3, 3, 1, -1, "L"),
    ),
}


def build_reference(name, phi):
    """Evaluate the reference transcription of one matrix at angle phi."""
    kind = plane_kind(name)
    c_val, s_val = _cs(kind, phi / 2)
    rows = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            rows[i][j] = ONE * 0
    for i, j, c, s, unit in REFERENCE_GENERATOR_TABLE[name]:
        cell = ONE * (c * c_val)
        if s:
            cell = cell + UNIT[unit] * (s * s_val)
        rows[i][j] = cell
    return TensorMatrix(rows)


def _cell_str(entry):
    return str(entry)


def appendix_check(config=None, angles=(0.3, 1.0, -0.7)):
    """Diff the bundled reference table against recomputation.

    One entry per plane.  Transcription mismatches are documented
    (with the differing cells), never reported as failures; the
    recomputed matrix is the ground truth.
    """
    config = dict(config or {})
    tol = config.get("tolerance", 1e-12)
    report = Report("appendix", config)
    for name in PLANES:
        bad_cells = {}
        for phi in angles:
            recomputed = generator(name, phi)
            reference = build_reference(name, phi)
            for i in range(4):
                for j in range(4):
                    d = recomputed.rows[i][j] - reference.rows[i][j]
                    if d.max_abs() > tol:
                        bad_cells.setdefault((i, j), (
                            reference.rows[i][j],
                            recomputed.rows[i][j],
                        ))
        if not bad_cells:
            report.add_comparison(
                "appendix[%s]" % name,
                True,
                "reference transcription",
                "match at angles %s" % (angles,),
            )
        else:
            details = "; ".join(
                "(%d,%d) reference=%s recomputed=%s"
                % (i, j, _cell_str(ref), _cell_str(rec))
                for (i, j), (ref, rec) in sorted(bad_cells.items())
            )
            report.add_comparison(
                "appendix[%s]" % name,
                False,
                "reference transcription",
                "differs at cells %s" % sorted(bad_cells),
                "recomputed matrix is ground truth; at angle %s: %s"
                % (angles[0], details),
            )
    return report
