//! A tour of exact octonion arithmetic: products, conjugation, norms, the
//! cross product, the calibration 3-form, and the associator.
//!
//! Run with `cargo run --example octonions`.

use g2forge::octonion::{cross, im_idx::*, omega, ImOctonion, Octonion};
use g2forge::Scalar;

fn main() {
    // products in the doubled basis {1, i, j, k, l, il, jl, kl}
    let (i, j, l) = (Octonion::i(), Octonion::j(), Octonion::l());
    println!("i * j       = {}", &i * &j);
    println!("i * l       = {}", &i * &l);
    println!("jl * il     = {}", &Octonion::jl() * &Octonion::il());
    println!(
        "e1 * e2     = {}  (index rules agree with the doubling)",
        &Octonion::e(1) * &Octonion::e(2)
    );

    // conjugation, trace, norm and the quadratic relation
    let x = &Octonion::one() + &i;
    println!("\nx           = {x}");
    println!("conj(x)     = {}", x.conj());
    println!("t(x), n(x)  = {}, {}", x.trace(), x.norm());
    let q = &(&(&x * &x) - &x.scale(&x.trace())) + &Octonion::one().scale(&x.norm());
    println!("x^2 - t(x)x + n(x)  = {q}");

    // the norm is multiplicative
    let y = &Octonion::jl() - &Octonion::k().scale(&Scalar::from_int(2));
    println!(
        "\nn(xy) = {} = n(x)n(y) = {}",
        (&x * &y).norm(),
        x.norm() * y.norm()
    );

    // the octonions are not associative, but they are alternative
    let assoc = Octonion::associator(&i, &j, &l);
    println!("\n(i, j, l)   = {assoc}");
    println!(
        "(i, j, k)   = {}",
        Octonion::associator(&i, &j, &Octonion::k())
    );
    println!("(i, i, l)   = {}", Octonion::associator(&i, &i, &l));

    // cross product and calibration on the imaginary part
    let u = ImOctonion::unit;
    println!("\ni x j       = {}", cross(&u(I), &u(J)));
    println!("Omega(i,j,k)= {}", omega(&u(I), &u(J), &u(K)));
    println!("Omega(i,j,l)= {}", omega(&u(I), &u(J), &u(L)));
    let (a, b) = (u(IL), u(KL));
    let double = cross(&a, &cross(&a, &b));
    println!("X x (X x Y) = {double}  (= -n(X) Y for X perp Y)");
}
