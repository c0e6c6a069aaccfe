// Polynomial formulas in the six parameters, written once and evaluated over
// both `f64` and `Rational`.

use num_traits::Num;

pub(crate) trait Field: Num + Clone {}

impl<T: Num + Clone> Field for T {}

fn two<T: Field>() -> T {
    T::one() + T::one()
}

fn sq<T: Field>(x: &T) -> T {
    x.clone() * x.clone()
}

/// `(K11, K12, K22)` at the point `(x1, x2)`.
pub(crate) fn components<T: Field>(a: &[T; 6], x1: &T, x2: &T) -> [T; 3] {
    let [a1, a2, a3, a4, a5, a6] = a.clone();
    let x1 = x1.clone();
    let x2 = x2.clone();
    let k11 = a1 + two::<T>() * a4.clone() * x2.clone() + a6.clone() * sq(&x2);
    let k12 = a3 - a4 * x1.clone() - a5.clone() * x2.clone() - a6.clone() * x1.clone() * x2;
    let k22 = a2 + two::<T>() * a5 * x1.clone() + a6 * sq(&x1);
    [k11, k12, k22]
}

/// Parameters of the pushed-forward tensor under the rigid motion with
/// rotation `(c, s) = (cos θ, sin θ)` and translation `(ta, tb)`.
pub(crate) fn induced<T: Field>(a: &[T; 6], c: &T, s: &T, ta: &T, tb: &T) -> [T; 6] {
    let [a1, a2, a3, a4, a5, a6] = a.clone();
    let (c, s, ta, tb) = (c.clone(), s.clone(), ta.clone(), tb.clone());
    let two = two::<T>();
    let cc = sq(&c);
    let ss = sq(&s);
    let cs = c.clone() * s.clone();

    let b1 = a1.clone() * cc.clone() + a2.clone() * ss.clone()
        - two.clone() * a3.clone() * cs.clone()
        - two.clone() * tb.clone() * a4.clone() * c.clone()
        - two.clone() * tb.clone() * a5.clone() * s.clone()
        + a6.clone() * sq(&tb);
    let b2 = a1.clone() * ss.clone() + a2.clone() * cc.clone()
        + two.clone() * a3.clone() * cs.clone()
        + two.clone() * ta.clone() * a4.clone() * s.clone()
        - two * ta.clone() * a5.clone() * c.clone()
        + a6.clone() * sq(&ta);
    let b3 = (a1 - a2) * cs + a3 * (cc - ss)
        + (a4.clone() * ta.clone() + a5.clone() * tb.clone()) * c.clone()
        + (a5.clone() * ta.clone() - a4.clone() * tb.clone()) * s.clone()
        - a6.clone() * ta.clone() * tb.clone();
    let b4 = a4.clone() * c.clone() + a5.clone() * s.clone() - a6.clone() * tb;
    let b5 = a5 * c - a4 * s - a6.clone() * ta;
    [b1, b2, b3, b4, b5, a6]
}

/// `ι1 = α6(α1 − α2) − α4² + α5²` and `ι2 = α3α6 + α4α5`.
pub(crate) fn iotas<T: Field>(a: &[T; 6]) -> (T, T) {
    let [a1, a2, a3, a4, a5, a6] = a.clone();
    let i1 = a6.clone() * (a1 - a2) - sq(&a4) + sq(&a5);
    let i2 = a3 * a6 + a4 * a5;
    (i1, i2)
}

/// `(Δ1, Δ2, Δ3)`.
pub(crate) fn deltas<T: Field>(a: &[T; 6]) -> [T; 3] {
    let (i1, i2) = iotas(a);
    let four = two::<T>() * two::<T>();
    let d1 = sq(&i1) + four.clone() * sq(&i2);
    let d2 = a[5].clone();
    let d3 = sq(&(a[0].clone() - a[1].clone())) + four * sq(&a[2]);
    [d1, d2, d3]
}

/// `(α1 + α2, α3² − α1α2)`.
pub(crate) fn leaf_e1<T: Field>(a: &[T; 6]) -> [T; 2] {
    [
        a[0].clone() + a[1].clone(),
        sq(&a[2]) - a[0].clone() * a[1].clone(),
    ]
}

/// `(α6α1 − α4², α6)`.
pub(crate) fn leaf_e2<T: Field>(a: &[T; 6]) -> [T; 2] {
    [a[5].clone() * a[0].clone() - sq(&a[3]), a[5].clone()]
}

/// `(α4² + α5², 2α3α4α5 + α1α5² + α2α4²)`.
pub(crate) fn leaf_e3p<T: Field>(a: &[T; 6]) -> [T; 2] {
    let [a1, a2, a3, a4, a5, _] = a.clone();
    [
        sq(&a4) + sq(&a5),
        two::<T>() * a3 * a4.clone() * a5.clone() + a1 * sq(&a5) + a2 * sq(&a4),
    ]
}

/// `(α6, α6(α1 + α2) − α4² − α5², α6(α3² − α1α2) + α4²α2 + 2α3α4α5 + α1α5²)`.
pub(crate) fn leaf_e3eh<T: Field>(a: &[T; 6]) -> [T; 3] {
    let [a1, a2, a3, a4, a5, a6] = a.clone();
    let i2 = a6.clone() * (a1.clone() + a2.clone()) - sq(&a4) - sq(&a5);
    let i3 = a6.clone() * (sq(&a3) - a1.clone() * a2.clone())
        + sq(&a4) * a2
        + two::<T>() * a3 * a4 * a5.clone()
        + a1 * sq(&a5);
    [a6, i2, i3]
}
