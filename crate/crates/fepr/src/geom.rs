//! Tolerance-aware 2D primitives shared by every solver.
//!
//! All comparisons route through [`Tol`], a single relative tolerance. The
//! numeric model is plain `f64`; exact apex coordinates would live in a
//! quadratic extension field, which nothing here needs.

use std::collections::VecDeque;
use std::ops::{Add, Mul, Sub};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("triangle inequality violated for lengths ({0}, {1}, {2})")]
    TriangleInequalityViolated(f64, f64, f64),
    #[error("tolerance must satisfy 0 < eps < 1e-3, got {0}")]
    BadTolerance(f64),
}

/// Relative tolerance used by every geometric predicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tol {
    eps: f64,
}

impl Tol {
    pub fn new(eps: f64) -> Result<Self, GeomError> {
        if eps > 0.0 && eps < 1e-3 && eps.is_finite() {
            Ok(Tol { eps })
        } else {
            Err(GeomError::BadTolerance(eps))
        }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
}

impl Default for Tol {
    fn default() -> Self {
        Tol { eps: 1e-9 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite point ({x}, {y})");
        Point { x, y }
    }

    pub fn dist(&self, other: Point) -> f64 {
        (*self - other).norm()
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(&self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(&self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Counter-clockwise rotation by 90 degrees.
    pub fn perp(&self) -> Point {
        Point::new(-self.y, self.x)
    }

    fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn len(&self) -> f64 {
        self.a.dist(self.b)
    }
}

/// Rigid motion: rotation followed by translation. Reflections are kept out
/// of this type on purpose; callers that need a mirror compose with
/// [`reflect_x`] explicitly.
#[derive(Debug, Clone, Copy)]
pub struct Rigid {
    cos: f64,
    sin: f64,
    tx: f64,
    ty: f64,
}

impl Rigid {
    pub fn identity() -> Self {
        Rigid { cos: 1.0, sin: 0.0, tx: 0.0, ty: 0.0 }
    }

    /// The rotation + translation that maps `from.0 -> to.0` and sends the
    /// direction of `from` onto the direction of `to`. The segment lengths
    /// should agree for the far endpoints to coincide.
    pub fn mapping_segment(from: (Point, Point), to: (Point, Point)) -> Self {
        let d_from = from.1 - from.0;
        let d_to = to.1 - to.0;
        let nf = d_from.norm();
        let nt = d_to.norm();
        assert!(nf > 0.0 && nt > 0.0, "degenerate segment in rigid motion");
        // rotation taking d_from/|d_from| to d_to/|d_to|
        let cos = d_from.dot(d_to) / (nf * nt);
        let sin = d_from.cross(d_to) / (nf * nt);
        let rot = Rigid { cos, sin, tx: 0.0, ty: 0.0 };
        let p = rot.apply(from.0);
        Rigid { cos, sin, tx: to.0.x - p.x, ty: to.0.y - p.y }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(
            self.cos * p.x - self.sin * p.y + self.tx,
            self.sin * p.x + self.cos * p.y + self.ty,
        )
    }
}

/// Reflection across the x-axis.
pub fn reflect_x(p: Point) -> Point {
    Point::new(p.x, -p.y)
}

/// Sign of the cross product (q-p) x (r-p), snapped to zero when its
/// magnitude is below `eps * scale^2` with `scale` the largest coordinate
/// magnitude among the three points.
pub fn orientation(p: Point, q: Point, r: Point, tol: Tol) -> i32 {
    let v = (q - p).cross(r - p);
    let scale = p.max_abs().max(q.max_abs()).max(r.max_abs()).max(1.0);
    if v.abs() <= tol.eps() * scale * scale {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

/// How two segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectKind {
    Disjoint,
    /// Interiors cross at a single point.
    ProperCross,
    /// Single-point contact involving an endpoint of at least one segment.
    TouchAtEndpoint,
    /// Collinear segments sharing more than one point.
    Overlap,
}

fn on_segment_collinear(p: Point, s: Segment, tol: Tol) -> bool {
    // assumes p collinear with s within tolerance
    let scale = s.len().max(1.0);
    let t = tol.eps() * scale;
    p.x >= s.a.x.min(s.b.x) - t
        && p.x <= s.a.x.max(s.b.x) + t
        && p.y >= s.a.y.min(s.b.y) - t
        && p.y <= s.a.y.max(s.b.y) + t
}

/// Classify the intersection of two segments. Shared-endpoint contact of
/// adjacent edges classifies as `TouchAtEndpoint`, never `ProperCross`.
pub fn segments_intersect(s1: Segment, s2: Segment, tol: Tol) -> IntersectKind {
    let d1 = orientation(s2.a, s2.b, s1.a, tol);
    let d2 = orientation(s2.a, s2.b, s1.b, tol);
    let d3 = orientation(s1.a, s1.b, s2.a, tol);
    let d4 = orientation(s1.a, s1.b, s2.b, tol);

    if d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 {
        if d1 != d2 && d3 != d4 {
            return IntersectKind::ProperCross;
        }
        return IntersectKind::Disjoint;
    }

    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        // all collinear: count the contact set
        let mut touches = 0;
        for (p, s) in [(s1.a, s2), (s1.b, s2), (s2.a, s1), (s2.b, s1)] {
            if on_segment_collinear(p, s, tol) {
                touches += 1;
            }
        }
        if touches == 0 {
            return IntersectKind::Disjoint;
        }
        // single shared endpoint counts twice (once from each side)
        let shared_endpoint = (s1.a.dist(s2.a).min(s1.a.dist(s2.b)) <= tol.eps() * s1.len().max(1.0))
            || (s1.b.dist(s2.a).min(s1.b.dist(s2.b)) <= tol.eps() * s1.len().max(1.0));
        if touches <= 2 && shared_endpoint {
            // overlapping beyond the shared point would put a third endpoint inside
            return IntersectKind::TouchAtEndpoint;
        }
        return IntersectKind::Overlap;
    }

    // some orientation is zero: endpoint-on-segment contact or no contact
    let mut touch = false;
    if d1 == 0 && on_segment_collinear(s1.a, s2, tol) {
        touch = true;
    }
    if d2 == 0 && on_segment_collinear(s1.b, s2, tol) {
        touch = true;
    }
    if d3 == 0 && on_segment_collinear(s2.a, s1, tol) {
        touch = true;
    }
    if d4 == 0 && on_segment_collinear(s2.b, s1, tol) {
        touch = true;
    }
    if touch {
        IntersectKind::TouchAtEndpoint
    } else {
        IntersectKind::Disjoint
    }
}

/// True iff every length is strictly smaller than the sum of the other two,
/// with strictness enforced at relative tolerance (tight triples fail).
pub fn triangle_inequality_ok(l1: f64, l2: f64, l3: f64, tol: Tol) -> bool {
    let scale = l1.max(l2).max(l3);
    let t = tol.eps() * scale;
    l2 + l3 - l1 > t && l1 + l3 - l2 > t && l1 + l2 - l3 > t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Place the apex `c` with `|ac| = len_ac` and `|bc| = len_bc` on the given
/// side of the directed line a->b. A collinear apex is permitted when the
/// triangle inequality is tight within tolerance.
pub fn place_apex(
    a: Point,
    b: Point,
    len_ac: f64,
    len_bc: f64,
    side: Side,
    tol: Tol,
) -> Result<Point, GeomError> {
    let d = a.dist(b);
    let scale = d.max(len_ac).max(len_bc);
    let t = tol.eps() * scale;
    if d > len_ac + len_bc + t || len_ac > d + len_bc + t || len_bc > d + len_ac + t {
        return Err(GeomError::TriangleInequalityViolated(d, len_ac, len_bc));
    }
    // coordinates along/perpendicular to a->b
    let x = (d * d + len_ac * len_ac - len_bc * len_bc) / (2.0 * d);
    let h2 = len_ac * len_ac - x * x;
    let h = if h2 <= 0.0 { 0.0 } else { h2.sqrt() };
    let dir = (b - a) * (1.0 / d);
    let n = dir.perp(); // left normal of a->b
    let sgn = match side {
        Side::Left => 1.0,
        Side::Right => -1.0,
    };
    Ok(a + dir * x + n * (h * sgn))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleLocation {
    StrictInterior,
    Boundary,
    Exterior,
}

/// Classify `p` against the (non-degenerate) triangle `t` via three
/// orientation tests.
pub fn point_in_triangle(p: Point, t: [Point; 3], tol: Tol) -> TriangleLocation {
    let o = orientation(t[0], t[1], t[2], tol);
    debug_assert!(o != 0, "degenerate triangle in point_in_triangle");
    let s1 = orientation(t[0], t[1], p, tol);
    let s2 = orientation(t[1], t[2], p, tol);
    let s3 = orientation(t[2], t[0], p, tol);
    if s1 == o && s2 == o && s3 == o {
        return TriangleLocation::StrictInterior;
    }
    let inside_or_on = (s1 == o || s1 == 0) && (s2 == o || s2 == 0) && (s3 == o || s3 == 0);
    if inside_or_on {
        TriangleLocation::Boundary
    } else {
        TriangleLocation::Exterior
    }
}

/// Incremental convex hull of a simple polyline (Melkman). Points are fed in
/// path order; `hull()` is the current hull boundary as a counter-clockwise
/// cycle. Collinear non-extreme points are dropped.
#[derive(Debug, Clone)]
pub struct MelkmanHull {
    // deque with front() == back() == the hull point most recently added
    deque: VecDeque<usize>,
    points: Vec<Point>,
    tol: Tol,
}

impl MelkmanHull {
    pub fn new(tol: Tol) -> Self {
        MelkmanHull { deque: VecDeque::new(), points: Vec::new(), tol }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    fn ccw(&self, a: usize, b: usize, c: usize) -> i32 {
        orientation(self.points[a], self.points[b], self.points[c], self.tol)
    }

    /// Feed the next polyline point. Returns true if the point is on the new
    /// hull boundary.
    pub fn push(&mut self, p: Point) -> bool {
        let i = self.points.len();
        self.points.push(p);
        match i {
            0 => {
                self.deque.push_back(0);
                return true;
            }
            1 => {
                self.deque = VecDeque::from(vec![1, 0, 1]);
                return true;
            }
            2 => {
                // orient the initial triangle counter-clockwise
                let d = match self.ccw(0, 1, 2) {
                    o if o > 0 => vec![2, 0, 1, 2],
                    o if o < 0 => vec![2, 1, 0, 2],
                    // collinear start: keep the two extreme points
                    _ => {
                        let (a, b) = extreme_pair(&self.points, self.tol);
                        vec![b, a, b]
                    }
                };
                self.deque = VecDeque::from(d);
                return self.deque.contains(&2);
            }
            _ => {}
        }

        let n = self.deque.len();
        let front_turn = self.ccw(i, self.deque[0], self.deque[1]);
        let back_turn = self.ccw(self.deque[n - 2], self.deque[n - 1], i);
        if front_turn > 0 && back_turn > 0 {
            // inside the current hull
            return false;
        }
        // pop from the front while the turn is not strictly left
        while self.deque.len() >= 2 && self.ccw(i, self.deque[0], self.deque[1]) <= 0 {
            self.deque.pop_front();
        }
        self.deque.push_front(i);
        // pop from the back likewise
        while self.deque.len() >= 2
            && self.ccw(self.deque[self.deque.len() - 2], self.deque[self.deque.len() - 1], i) <= 0
        {
            self.deque.pop_back();
        }
        self.deque.push_back(i);
        true
    }

    /// Current hull as counter-clockwise point indices (no repeated start).
    pub fn hull_indices(&self) -> Vec<usize> {
        if self.deque.len() <= 1 {
            return self.deque.iter().copied().collect();
        }
        let mut v: Vec<usize> = self.deque.iter().copied().collect();
        v.pop(); // drop the duplicated bracket
        v
    }

    pub fn hull_points(&self) -> Vec<Point> {
        self.hull_indices().into_iter().map(|i| self.points[i]).collect()
    }

    /// Whether polyline point `i` is currently a hull vertex.
    pub fn on_hull(&self, i: usize) -> bool {
        self.deque.contains(&i)
    }

    /// Hull neighbors of a hull vertex (as point indices), in no particular
    /// orientation.
    pub fn hull_neighbors(&self, i: usize) -> Option<(usize, usize)> {
        let h = self.hull_indices();
        let k = h.iter().position(|&x| x == i)?;
        if h.len() == 1 {
            return None;
        }
        if h.len() == 2 {
            let other = h[1 - k];
            return Some((other, other));
        }
        let prev = h[(k + h.len() - 1) % h.len()];
        let next = h[(k + 1) % h.len()];
        Some((prev, next))
    }
}

fn extreme_pair(points: &[Point], _tol: Tol) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for (i, p) in points.iter().enumerate() {
        let key = (p.x, p.y);
        let lo_key = (points[lo].x, points[lo].y);
        let hi_key = (points[hi].x, points[hi].y);
        if key < lo_key {
            lo = i;
        }
        if key > hi_key {
            hi = i;
        }
    }
    (lo, hi)
}

/// Hull boundary of each prefix of a simple polyline, each as a
/// counter-clockwise vertex cycle. Total work is linear in the input size.
pub fn incremental_hull(points: &[Point], tol: Tol) -> Vec<Vec<Point>> {
    let mut m = MelkmanHull::new(tol);
    let mut out = Vec::with_capacity(points.len());
    for &p in points {
        m.push(p);
        out.push(m.hull_points());
    }
    out
}

/// Pseudo-ordering of directions for rotation checks: the clockwise amount
/// (in radians, within [0, 2*pi)) one must rotate `reference` to reach `d`.
pub fn clockwise_amount(reference: Point, d: Point) -> f64 {
    let a = reference.y.atan2(reference.x) - d.y.atan2(d.x);
    let mut a = a % (2.0 * std::f64::consts::PI);
    if a < 0.0 {
        a += 2.0 * std::f64::consts::PI;
    }
    a
}
