//! Free pairs in the quotient division ring of the Weyl algebra, through the
//! cyclic algebra of degree 3 over GF(3)(a, b).

use super::report::{ScenarioReport, Verdict};
use crate::algebras::{cayley, cyclic_field, CycElem, CycStar};
use crate::arith::parse::{parse_ext, parse_unipoly};
use crate::arith::{ExtDescriptor, ExtElem, FieldElem, Gf3, SqMatrix};
use crate::error::{Error, Result};
use crate::freeness::{certify, recheck, Strength};
use crate::places::{PlaceSpec, Residue};
use crate::weyl::{transported_star, weyl_to_cyclic, NamedWeylInvolution, WeylElem, WeylInvolutionSpec};
use std::sync::Arc;

type M = SqMatrix<ExtElem<Gf3>>;

/// Stated residues of `(det(I-W)) V` and `(det(I+W)) V^-1`, row by row.
const U_TABLE: [&str; 9] = [
    "b^-1*(2*b^2+b+1)",
    "b^-1+a",
    "1+b^-1*a*(b+1)",
    "-b+1",
    "b^-1*(1+2*a*b-2*b+2*a*b^2)",
    "2+b^-1*a*(b+2)",
    "b*(1+a)+2*a",
    "a+2*a*b-2*b",
    "b^-1*(1-b+2*a*b+2*a*b^2)",
];

const S_TABLE: [&str; 9] = [
    "b^-1*(2+b+a*b^2)",
    "b^-1+2*a",
    "1+a*b^-1*(b+2)",
    "2-b",
    "b^-1*(2-2*b+2*a*b+a*b^2)",
    "1+a*b^-1*(2*b+2)",
    "2*a+2*b*(1+a)",
    "a*(2+2*b*(1+a))",
    "b^-1*(2-b+2*a*b+a*b^2)",
];

const DET_MINUS: &str = "(a*b)^-1*(b+2*a+2*b^2)";
const DET_PLUS: &str = "(a*b)^-1*(a+b+b^2)";

fn w(s: &str) -> WeylElem {
    WeylElem::parse(s).expect("valid Weyl literal")
}

fn cyc(s: &str) -> CycElem {
    CycElem::parse(s).expect("valid cyclic literal")
}

fn ki(s: &str) -> ExtElem<Gf3> {
    parse_ext(s, cyclic_field()).expect("valid K(i) literal")
}

fn mat(rows: &[&[&str]]) -> M {
    SqMatrix::new(rows.iter().map(|r| r.iter().map(|s| ki(s)).collect()).collect()).expect("square")
}

fn cyclic_place(name: &str, prime: &str, image: &str, pi: &str) -> PlaceSpec {
    PlaceSpec {
        name: name.into(),
        field: "GF(3)".into(),
        generator: "i".into(),
        minpoly: "i^3-i-a".into(),
        base_var: "a".into(),
        base_prime: prime.into(),
        gen_image: image.into(),
        uniformizer: pi.into(),
    }
}

pub(crate) fn id(case: u8) -> &'static str {
    match case {
        1 => "weyl/1",
        _ => "weyl/2",
    }
}

pub(crate) fn expected(_case: u8) -> Verdict {
    Verdict::Certified
}

pub(crate) fn summary(case: u8) -> &'static str {
    match case {
        1 => "s* = t, t* = s: symmetric pair {u, v^-1 u v}",
        _ => "s* = s, t* = -t: unitary pair {u, v^-1 u v}",
    }
}

pub(crate) fn run(case: u8) -> Result<ScenarioReport> {
    let (named, involution) = match case {
        1 => (NamedWeylInvolution::Swap, "s* = t, t* = s"),
        2 => (NamedWeylInvolution::Sign, "s* = s, t* = -t"),
        _ => return Err(Error::UndefinedCase(format!("Weyl case {case}"))),
    };
    let spec = WeylInvolutionSpec::named(named);
    let title = format!("Weyl algebra, {}", summary(case));
    let mut r = ScenarioReport::new(id(case), &title, involution.to_string(), expected(case));
    let star = transported_star(&spec)?;
    r.image("star(i)", &star.star_i);
    r.image("star(j)", &star.star_j);
    r.image("star(a)", &star.sigma.a);
    r.image("star(b)", &star.sigma.b);
    r.target_pair = vec!["u".into(), "v^-1 u v".into()];
    if case == 1 {
        case_one(&mut r, &spec, &star)?;
    } else {
        case_two(&mut r, &spec, &star)?;
    }
    r.conclude();
    Ok(r)
}

fn conj_pair(r: &mut ScenarioReport, star: &CycStar, u: &CycElem, v: &CycElem, symmetric: bool) -> Result<()> {
    let c = v.try_inv()?.mul(u).mul(v);
    r.image("image of v^-1 u v", &c);
    if symmetric {
        r.check("image of u is fixed by the transported involution", star.is_symmetric(u));
        r.check("image of v times its transported star is 1", star.is_unitary(v));
        r.check("image of v^-1 u v is fixed by the transported involution", star.is_symmetric(&c));
    } else {
        r.check("image of u times its transported star is 1", star.is_unitary(u));
        r.check("image of v times its transported star is 1", star.is_unitary(v));
        r.check("image of v^-1 u v times its transported star is 1", star.is_unitary(&c));
    }
    Ok(())
}

fn finish(r: &mut ScenarioReport, a: &M, b: &M, spec: PlaceSpec) -> Result<()> {
    let place = spec.build::<Gf3>()?;
    r.matrix("A", a);
    r.matrix("B", b);
    let cert = certify(a, b, &place, Strength::ExactPair)?;
    r.recheck_issues = recheck(&cert, a, b, &place)?;
    r.certificate = Some(cert);
    r.place = Some(spec);
    Ok(())
}

fn residue_value(desc: &Arc<ExtDescriptor<Gf3>>, s: &str) -> Residue<Gf3> {
    Residue::Value(parse_ext(s, desc).expect("valid residue literal"))
}

fn case_one(r: &mut ScenarioReport, spec: &WeylInvolutionSpec, star: &CycStar) -> Result<()> {
    let ts = w("t*s");
    let z = w("s*t*s - t*s*t");
    r.element("ts", &ts);
    r.element("sts - tst", &z);
    r.check("ts* = ts", spec.apply(&ts) == ts);
    r.check("(sts - tst)* = -(sts - tst)", spec.apply(&z) == z.neg());
    r.element("u", "(1+(ts)^2)(1+(ts+1)^2)^-1");
    r.element("v", "(1+(sts-tst))(1-(sts-tst))^-1");
    let ti = weyl_to_cyclic(&ts)?;
    let tz = weyl_to_cyclic(&z)?;
    r.image("image of ts", &ti);
    r.image("image of sts - tst", &tz);
    r.compare("image of ts", &cyc("i"), &ti);
    r.compare("image of sts - tst", &cyc("j^-1*i^2 - i*j"), &tz);
    let one = CycElem::from_i64(1);
    let i = CycElem::i();
    let u = one
        .add(&i.mul(&i))
        .mul(&one.add(&i.add(&one).pow(2)).try_inv()?);
    let v = cayley(&tz.neg())?;
    r.image("image of u", &u);
    r.image("image of v", &v);
    conj_pair(r, star, &u, &v, true)?;

    let um = u.reg_rep();
    let wm = tz.reg_rep();
    let id3 = SqMatrix::identity(3, &ki("1"));
    let (imw, ipw) = (id3.sub(&wm), id3.add(&wm));
    let vm = v.reg_rep();
    r.matrix("W", &wm);
    let stated_w = mat(&[
        &["0", "2*i", "b^-1*(i+1)^2"],
        &["i^2", "0", "2*i+1"],
        &["2*b*(i+1)", "(i+2)^2", "0"],
    ]);
    r.compare("W", &stated_w, &wm);
    let stated_u = SqMatrix::diag(vec![
        ki("(1+i^2)/(1+(i+1)^2)"),
        ki("(1+(i+2)^2)/(1+i^2)"),
        ki("(1+(i+1)^2)/(1+(i+2)^2)"),
    ]);
    r.compare("U", &stated_u, &um);
    r.check("V = (I+W)(I-W)^-1", vm == ipw.mul(&imw.inverse()?));

    let h = ki("1+i^2").min_poly();
    let stated_h = parse_unipoly::<Gf3>("t^3-2*t^2+2*t-1-a^2", "t")?;
    r.compare("minimal polynomial of 1+i^2", &stated_h, &h);

    let pspec = cyclic_place("P(1+i^2)", "a^2+1", "a", "1+i^2");
    let place = pspec.build::<Gf3>()?;
    let rf = place.residue_field().clone();
    let eigen = um.diagonal();
    let stated_nu = [1, -1, 0];
    for (k, (e, s)) in eigen.iter().zip(stated_nu).enumerate() {
        r.compare(&format!("nu(U{0}{0})", k + 1), &s, &place.valuation(e)?);
    }
    let dm = imw.det();
    let dp = ipw.det();
    let ut = ipw.mul(&imw.adjugate());
    let st = imw.mul(&ipw.adjugate());
    let mut rows: Vec<(String, ExtElem<Gf3>, &str)> = vec![
        ("det(I-W)".into(), dm, DET_MINUS),
        ("det(I+W)".into(), dp, DET_PLUS),
    ];
    for (name, m, table) in [("u", &ut, &U_TABLE), ("s", &st, &S_TABLE)] {
        for k in 0..9 {
            let (p, q) = (k / 3, k % 3);
            rows.push((format!("{name}{}{}", p + 1, q + 1), m.get(p, q).clone(), table[k]));
        }
    }
    for (name, x, stated) in rows {
        let res = place.residue(&x)?;
        r.residues.push(super::report::NamedValue {
            name: name.clone(),
            value: res.to_string(),
        });
        r.compare(&format!("residue of {name}"), &residue_value(&rf, stated), &res);
    }
    r.note(
        "Residues are taken in GF(3)(b)[a]/(a^2+1), the residue field of the place containing \
1+i^2, where i maps to a. The stated table matches the matrix W with (i+1)^2 in position (3,2); \
the W displayed alongside it, and computed here, has (i+2)^2 there. With that W the table differs \
entry by entry, while every entry still has valuation zero.",
    );
    finish(r, &um, &vm, pspec)
}

fn case_two(r: &mut ScenarioReport, spec: &WeylInvolutionSpec, star: &CycStar) -> Result<()> {
    let w1 = w("t*s + s*t");
    let z = w("t^2*s - s*t^2");
    r.element("ts + st", &w1);
    r.element("t^2 s - s t^2", &z);
    r.check("(ts + st)* = -(ts + st)", spec.apply(&w1) == w1.neg());
    r.check("(t^2 s - s t^2)* = -(t^2 s - s t^2)", spec.apply(&z) == z.neg());
    r.element("u", "(1+ts+st)(1-ts-st)^-1");
    r.element("v", "(1-t^2s+st^2)(1+t^2s-st^2)^-1");
    let iw = weyl_to_cyclic(&w1)?;
    let iz = weyl_to_cyclic(&z)?;
    r.image("image of ts + st", &iw);
    r.image("image of t^2 s - s t^2", &iz);
    let u = cayley(&iw.neg())?;
    let v = cayley(&iz)?;
    r.image("image of u", &u);
    r.image("image of v", &v);
    r.compare("image of u", &cyc("2*(i+1)*i^-1"), &u);
    r.compare("image of u, second form", &cyc("2*a^-1*(i+1)^2*(i+2)"), &u);
    r.compare("image of v", &cyc("(1+2*j)*(1+j)^-1"), &v);
    r.compare("image of v, second form", &cyc("(1+b)^-1*(1+2*b+j+2*j^2)"), &v);
    conj_pair(r, star, &u, &v, false)?;

    let um = u.reg_rep();
    let vm = v.reg_rep();
    let vinv = vm.inverse()?;
    let stated_u = SqMatrix::diag(vec![ki("(i+1)^2*(i+2)"), ki("i^2*(i+1)"), ki("(i+2)^2*i")]).scale(&ki("2/a"));
    let stated_v = mat(&[
        &["1+2*b", "1", "2"],
        &["2*b", "1+2*b", "1"],
        &["b", "2*b", "1+2*b"],
    ])
    .scale(&ki("1/(1+b)"));
    let stated_vinv = mat(&[
        &["2+2*b", "1", "1"],
        &["b", "2+2*b", "1"],
        &["b", "b", "2+2*b"],
    ])
    .scale(&ki("1/(2+b)"));
    r.compare("U", &stated_u, &um);
    r.compare("V", &stated_v, &vm);
    r.compare("V^-1", &stated_vinv, &vinv);
    finish(r, &um, &vm, cyclic_place("P(i)", "a", "0", "i"))?;
    r.note(
        "The diagonal of U has valuations a permutation of (1, -1, 0) at the place containing i: \
i and a have valuation one there, while i+1 and i+2 are units.",
    );
    Ok(())
}
