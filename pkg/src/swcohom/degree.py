"""Certified Brouwer degree in dimensions one to three.

The boundary of the domain is a polytope (segment endpoints, a square,
an octahedron) so every sample point has exact rational coordinates, and
polynomial evaluators return exact rational images.  Transcendental work
(atan2, sqrt, pi) runs in mpmath interval arithmetic; an integer degree
is accepted only when the final interval pins down a unique integer.

Callers promise that all zeros of the map lie strictly inside the
Euclidean ball of the given radius and that none lie between that sphere
and the circumscribing polytope boundary (automatic in the common case
of zeros well inside the ball).
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import iv

__all__ = ["brouwer_degree"]

# refinement stops once image steps subtend less than a right angle; these
# caps bound the total work before giving up
MAX_LOOP_POINTS = 1 << 15
MAX_TRIANGLES = 1 << 16


def _iv_frac(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _certified_int(interval_value) -> int:
    lo, hi = interval_value.a, interval_value.b
    mid = (float(lo) + float(hi)) / 2
    k = round(mid)
    if lo > k - 0.5 and hi < k + 0.5:
        return k
    raise ArithmeticError(
        f"interval [{lo}, {hi}] does not certify a unique integer"
    )


def _evaluate(g, point):
    image = [Fraction(y) for y in g(list(point))]
    if not any(image):
        raise ValueError(f"map vanishes on the boundary at {point}")
    return image


def _degree_dim1(g, radius: Fraction) -> int:
    left = _evaluate(g, (-radius,))[0]
    right = _evaluate(g, (radius,))[0]
    sign = lambda v: (v > 0) - (v < 0)
    return (sign(right) - sign(left)) // 2


def _midpoint(p, q):
    return tuple((a + b) / 2 for a, b in zip(p, q))


def _degree_dim2(g, radius: Fraction) -> int:
    r = Fraction(radius)
    corners = [(r, -r), (r, r), (-r, r), (-r, -r)]
    points = []
    for i in range(4):
        points.append(corners[i])
        points.append(_midpoint(corners[i], corners[(i + 1) % 4]))
    images = [_evaluate(g, p) for p in points]

    # refine until consecutive images subtend an angle below pi/2,
    # witnessed exactly by a positive dot product
    while True:
        refined_points, refined_images = [], []
        clean = True
        for i, (p, img) in enumerate(zip(points, images)):
            q = points[(i + 1) % len(points)]
            img_q = images[(i + 1) % len(images)]
            refined_points.append(p)
            refined_images.append(img)
            if img[0] * img_q[0] + img[1] * img_q[1] <= 0:
                m = _midpoint(p, q)
                refined_points.append(m)
                refined_images.append(_evaluate(g, m))
                clean = False
        points, images = refined_points, refined_images
        if clean:
            break
        if len(points) > MAX_LOOP_POINTS:
            raise ArithmeticError(
                "boundary refinement budget exceeded; map may vanish on "
                "or near the boundary"
            )

    old_prec = iv.prec
    iv.prec = 80
    try:
        total = iv.mpf(0)
        for i, p_img in enumerate(images):
            q_img = images[(i + 1) % len(images)]
            cross = p_img[0] * q_img[1] - p_img[1] * q_img[0]
            dot = p_img[0] * q_img[0] + p_img[1] * q_img[1]
            total += iv.atan2(_iv_frac(cross), _iv_frac(dot))
        return _certified_int(total / (2 * iv.pi))
    finally:
        iv.prec = old_prec


def _solid_angle(a, b, c):
    # Van Oosterom-Strackee: tan(Omega/2) = det[a b c] / D with
    # D = |a||b||c| + (a.b)|c| + (b.c)|a| + (c.a)|b|
    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    na = iv.sqrt(_iv_frac(dot(a, a)))
    nb = iv.sqrt(_iv_frac(dot(b, b)))
    nc = iv.sqrt(_iv_frac(dot(c, c)))
    d = (
        na * nb * nc
        + _iv_frac(dot(a, b)) * nc
        + _iv_frac(dot(b, c)) * na
        + _iv_frac(dot(c, a)) * nb
    )
    return 2 * iv.atan2(_iv_frac(det), d)


def _octahedron_faces(radius_l1: Fraction):
    zero = Fraction(0)
    faces = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                a = (s1 * radius_l1, zero, zero)
                b = (zero, s2 * radius_l1, zero)
                c = (zero, zero, s3 * radius_l1)
                # outward orientation: det[a b c] = s1 s2 s3 must be > 0
                if s1 * s2 * s3 > 0:
                    faces.append((a, b, c))
                else:
                    faces.append((a, c, b))
    return faces


def _degree_dim3(g, radius: Fraction) -> int:
    # octahedron of L1-radius 7r/4 circumscribes the Euclidean r-ball
    faces = _octahedron_faces(7 * Fraction(radius) / 4)
    cache = {}

    def image(p):
        if p not in cache:
            cache[p] = tuple(_evaluate(g, p))
        return cache[p]

    def well_separated(tri):
        imgs = [image(p) for p in tri]
        for i in range(3):
            u, v = imgs[i], imgs[(i + 1) % 3]
            if sum(x * y for x, y in zip(u, v)) <= 0:
                return False
        return True

    pending = list(faces)
    accepted = []
    while pending:
        if len(pending) + len(accepted) > MAX_TRIANGLES:
            raise ArithmeticError(
                "surface refinement budget exceeded; map may vanish on "
                "or near the boundary"
            )
        tri = pending.pop()
        if well_separated(tri):
            accepted.append(tri)
            continue
        a, b, c = tri
        mab, mbc, mca = _midpoint(a, b), _midpoint(b, c), _midpoint(c, a)
        pending.extend(
            [(a, mab, mca), (mab, b, mbc), (mca, mbc, c), (mab, mbc, mca)]
        )

    old_prec = iv.prec
    iv.prec = 80
    try:
        total = iv.mpf(0)
        for a, b, c in accepted:
            total += _solid_angle(image(a), image(b), image(c))
        return _certified_int(total / (4 * iv.pi))
    finally:
        iv.prec = old_prec


def brouwer_degree(g, dim: int, radius) -> int:
    """Degree of g around 0 over a boundary enclosing the radius-ball.

    g maps a list of ``dim`` Fractions to a list of ``dim`` Fractions and
    must be nonvanishing on the enclosing boundary polytope.  dim 1 is a
    sign comparison at the two endpoints, dim 2 an accumulated-angle
    winding number, dim 3 a summed signed solid angle; the latter two are
    certified through interval arithmetic.
    """
    r = Fraction(radius)
    if r <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if dim == 1:
        return _degree_dim1(g, r)
    if dim == 2:
        return _degree_dim2(g, r)
    if dim == 3:
        return _degree_dim3(g, r)
    raise ValueError(f"degree computation supports dim 1..3, got {dim}")
