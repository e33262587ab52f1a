//! Free symmetric and unitary pairs for the Heisenberg group ring, one
//! function per case of the involution classification.

use super::report::{ScenarioReport, Verdict};
use super::{Mode, WORD_COUNT, WORD_LEN};
use crate::algebras::{cayley, QuatElem, QuatStar, RepField};
use crate::arith::{ExtElem, FieldElem, Scalar, SqMatrix, Q};
use crate::error::{Error, Result};
use crate::freeness::{certify, recheck, sample_words, Strength};
use crate::heisenberg::{GroupRingElem, HeisElem, InvolutionSpec, InvolutionType, MapKind};
use crate::places::PlaceSpec;

type G = GroupRingElem<Q>;
type H = QuatElem<Q>;

/// The sixteen Heisenberg sub-cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum HeisCase {
    SymIEvenEven,
    SymIEvenOdd,
    SymIOddEven,
    SymIOddOdd,
    SymII,
    SymIIIEven,
    SymIIIOdd,
    SymIVEven,
    SymIVOdd,
    UniIEvenOrMixed,
    UniIOddOdd,
    UniII,
    UniIIIEven,
    UniIIIOdd,
    UniIVEven,
    UniIVOdd,
}

fn parity(k: i64) -> &'static str {
    if k.rem_euclid(2) == 0 {
        "even"
    } else {
        "odd"
    }
}

impl HeisCase {
    pub(crate) fn resolve(ty: InvolutionType, m: i64, n: i64, mode: Mode) -> Result<Self> {
        use HeisCase::*;
        let (pm, pn) = (parity(m), parity(n));
        let case = match (mode, ty) {
            (_, InvolutionType::II) if m != 0 || n != 0 => None,
            (_, InvolutionType::III | InvolutionType::IV) if n != 0 => None,
            (Mode::Symmetric, InvolutionType::I) => Some(match (pm, pn) {
                ("even", "even") => SymIEvenEven,
                ("even", _) => SymIEvenOdd,
                (_, "even") => SymIOddEven,
                _ => SymIOddOdd,
            }),
            (Mode::Symmetric, InvolutionType::II) => Some(SymII),
            (Mode::Symmetric, InvolutionType::III) => Some(if pm == "even" { SymIIIEven } else { SymIIIOdd }),
            (Mode::Symmetric, InvolutionType::IV) => Some(if pm == "even" { SymIVEven } else { SymIVOdd }),
            (Mode::Unitary, InvolutionType::I) => Some(if pm == "odd" && pn == "odd" {
                UniIOddOdd
            } else {
                UniIEvenOrMixed
            }),
            (Mode::Unitary, InvolutionType::II) => Some(UniII),
            (Mode::Unitary, InvolutionType::III) => Some(if pm == "even" { UniIIIEven } else { UniIIIOdd }),
            (Mode::Unitary, InvolutionType::IV) => Some(if pm == "even" { UniIVEven } else { UniIVOdd }),
        };
        case.ok_or_else(|| {
            Error::UndefinedCase(format!("type {ty} with m = {m}, n = {n} in {mode} mode"))
        })
    }

    pub(crate) fn id(self) -> &'static str {
        use HeisCase::*;
        match self {
            SymIEvenEven => "heis/sym/I/even-even",
            SymIEvenOdd => "heis/sym/I/even-odd",
            SymIOddEven => "heis/sym/I/odd-even",
            SymIOddOdd => "heis/sym/I/odd-odd",
            SymII => "heis/sym/II",
            SymIIIEven => "heis/sym/III/even",
            SymIIIOdd => "heis/sym/III/odd",
            SymIVEven => "heis/sym/IV/even",
            SymIVOdd => "heis/sym/IV/odd",
            UniIEvenOrMixed => "heis/uni/I/even-or-mixed",
            UniIOddOdd => "heis/uni/I/odd-odd",
            UniII => "heis/uni/II",
            UniIIIEven => "heis/uni/III/even",
            UniIIIOdd => "heis/uni/III/odd",
            UniIVEven => "heis/uni/IV/even",
            UniIVOdd => "heis/uni/IV/odd",
        }
    }

    pub(crate) fn all() -> [HeisCase; 16] {
        use HeisCase::*;
        [
            SymIEvenEven, SymIEvenOdd, SymIOddEven, SymIOddOdd, SymII, SymIIIEven, SymIIIOdd,
            SymIVEven, SymIVOdd, UniIEvenOrMixed, UniIOddOdd, UniII, UniIIIEven, UniIIIOdd,
            UniIVEven, UniIVOdd,
        ]
    }

    /// Parameters `(type, m, n, mode)` that select this case.
    pub(crate) fn representative(self) -> (InvolutionType, i64, i64, Mode) {
        use HeisCase::*;
        use InvolutionType as T;
        match self {
            SymIEvenEven => (T::I, 0, 0, Mode::Symmetric),
            SymIEvenOdd => (T::I, 0, 1, Mode::Symmetric),
            SymIOddEven => (T::I, 1, 0, Mode::Symmetric),
            SymIOddOdd => (T::I, 1, 1, Mode::Symmetric),
            SymII => (T::II, 0, 0, Mode::Symmetric),
            SymIIIEven => (T::III, 0, 0, Mode::Symmetric),
            SymIIIOdd => (T::III, 1, 0, Mode::Symmetric),
            SymIVEven => (T::IV, 0, 0, Mode::Symmetric),
            SymIVOdd => (T::IV, 1, 0, Mode::Symmetric),
            UniIEvenOrMixed => (T::I, 0, 0, Mode::Unitary),
            UniIOddOdd => (T::I, 1, 1, Mode::Unitary),
            UniII => (T::II, 0, 0, Mode::Unitary),
            UniIIIEven => (T::III, 0, 0, Mode::Unitary),
            UniIIIOdd => (T::III, 1, 0, Mode::Unitary),
            UniIVEven => (T::IV, 0, 0, Mode::Unitary),
            UniIVOdd => (T::IV, 1, 0, Mode::Unitary),
        }
    }

    pub(crate) fn expected(self) -> Verdict {
        use HeisCase::*;
        match self {
            SymIOddOdd | UniIEvenOrMixed => Verdict::Open,
            SymIEvenEven | SymII | SymIVEven | SymIVOdd => Verdict::Partial,
            _ => Verdict::Certified,
        }
    }

    pub(crate) fn summary(self) -> &'static str {
        use HeisCase::*;
        match self {
            SymIEvenEven => "type I, m and n even: {1+x+x*, 1+y+y*}",
            SymIEvenOdd => "type I, m even, n odd: {u, v^-1 u v}, v the Cayley transform of y-y*",
            SymIOddEven => "type I, m odd, n even: {u, v^-1 u v}, v the Cayley transform of x-x*",
            SymIOddOdd => "type I, m and n odd: no construction",
            SymII => "type II: {1+x+x*, 1+y+y*}",
            SymIIIEven => "type III, m even: {1+x, v^-1 (1+x) v}, r = x y^5 - zeta^5 y^-5 x",
            SymIIIOdd => "type III, m odd: {1+x, v^-1 (1+x) v}, r = x y - zeta y^-1 x",
            SymIVEven => "type IV, m even: {u u*, u* u}, u = 1+x+y*",
            SymIVOdd => "type IV, m odd: {u u*, u* u}, u = 1+x+zeta y* = 1+2x",
            UniIEvenOrMixed => "type I, m and n not both odd: no construction",
            UniIOddOdd => "type I, m and n odd: Cayley transforms of x-x* and y-y*",
            UniII => "type II: Cayley transforms of x-x* and y-y*",
            UniIIIEven => "type III, m even: {r, s^-1 r s} over F(j)",
            UniIIIOdd => "type III, m odd: {r, s^-1 r s} over F(j)",
            UniIVEven => "type IV, m even: {u, v^-1 u v} under x -> i, y -> ij",
            UniIVOdd => "type IV, m odd: {u, v^-1 u v} under x -> i, y -> ij",
        }
    }
}

fn x() -> G {
    G::x()
}

fn y() -> G {
    G::y()
}

fn one() -> G {
    G::one()
}

fn lam(k: i64) -> G {
    G::group(HeisElem::lambda_pow(k))
}

fn mono(m: i64, n: i64) -> G {
    G::group(HeisElem::new(0, m, n))
}

fn q(s: &str) -> H {
    QuatElem::parse(s).expect("valid quaternion literal")
}

fn place(name: &str, generator: &str, base_var: &str, prime: &str, image: &str, pi: &str) -> PlaceSpec {
    let minpoly = if generator == "i" { "i^2-a" } else { "j^2-b" };
    PlaceSpec {
        name: name.into(),
        field: "Q".into(),
        generator: generator.into(),
        minpoly: minpoly.into(),
        base_var: base_var.into(),
        base_prime: prime.into(),
        gen_image: image.into(),
        uniformizer: pi.into(),
    }
}

fn p_one_plus_2i() -> PlaceSpec {
    place("P(1+2i)", "i", "a", "1-4*a", "-1/2", "1+2*i")
}

struct Ctx<'a> {
    r: &'a mut ScenarioReport,
    spec: InvolutionSpec,
    star: QuatStar<Q>,
    map: MapKind,
    seed: u64,
}

impl Ctx<'_> {
    fn st(&self, u: &G) -> G {
        self.spec.apply(u)
    }

    fn img(&mut self, name: &str, u: &G) -> H {
        let v = self.map.apply(u);
        let label = match self.map {
            MapKind::Psi => format!("psi({name})"),
            MapKind::Phi => format!("phi({name})"),
        };
        self.r.image(&label, &v);
        v
    }

    fn cayley(&mut self, name: &str, w: &H) -> Result<H> {
        let c = cayley(w)?;
        self.r.image(name, &c);
        Ok(c)
    }

    fn symmetric_in_group_ring(&mut self, name: &str, u: &G) {
        let ok = self.st(u) == *u;
        self.r.check(&format!("{name}* = {name} in the group ring"), ok);
    }

    fn antisymmetric_in_group_ring(&mut self, name: &str, u: &G) {
        let ok = self.st(u) == u.neg();
        self.r.check(&format!("{name}* = -{name} in the group ring"), ok);
    }

    fn symmetric(&mut self, name: &str, h: &H) {
        let ok = self.star.is_symmetric(h);
        self.r.check(&format!("{name} is fixed by the transported involution"), ok);
    }

    fn unitary(&mut self, name: &str, h: &H) {
        let ok = self.star.is_unitary(h);
        self.r.check(&format!("{name} times its transported star is 1"), ok);
    }

    /// Records and certifies `{A, B^-1 A B}` at `spec`.
    fn certify(
        &mut self,
        a: &SqMatrix<ExtElem<Q>>,
        b: &SqMatrix<ExtElem<Q>>,
        spec: PlaceSpec,
        strength: Strength,
    ) -> Result<()> {
        let place = spec.build::<Q>()?;
        self.r.matrix("A", a);
        self.r.matrix("B", b);
        let cert = certify(a, b, &place, strength)?;
        self.r.recheck_issues = recheck(&cert, a, b, &place)?;
        self.r.certificate = Some(cert);
        self.r.place = Some(spec);
        Ok(())
    }

    fn sample(&mut self, g: &H, h: &H, over: RepField) -> Result<()> {
        let rep = sample_words(&g.reg_rep(over), &h.reg_rep(over), WORD_LEN, WORD_COUNT, self.seed)?;
        self.r.word_sample = Some(rep);
        Ok(())
    }

    /// Target pair `{u, v^-1 u v}` from images of `u` and `v`; adds the
    /// involution checks for both members.
    fn conjugate_pair(&mut self, mode: Mode, pu: &H, pv: &H, u: &str, v: &str) -> Result<()> {
        let conj = pv.inv().ok_or(Error::NotInvertible)?.mul(pu).mul(pv);
        self.r.image(&format!("image of {v}^-1 {u} {v}"), &conj);
        match mode {
            Mode::Symmetric => {
                self.unitary(&format!("image of {v}"), pv);
                self.symmetric(&format!("image of {u}"), pu);
                self.symmetric(&format!("image of {v}^-1 {u} {v}"), &conj);
            }
            Mode::Unitary => {
                self.unitary(&format!("image of {u}"), pu);
                self.unitary(&format!("image of {v}"), pv);
                self.unitary(&format!("image of {v}^-1 {u} {v}"), &conj);
            }
        }
        self.r.target_pair = vec![u.into(), format!("{v}^-1 {u} {v}")];
        Ok(())
    }
}

const WITNESS_NOTE: &str = "The certificate covers {A, B^-1 A B}, a pair inside the group generated by the \
images of the target elements. Freeness of the target pair itself is supported only by the word sample.";

pub(crate) fn run(case: HeisCase, ty: InvolutionType, m: i64, n: i64, seed: u64) -> Result<ScenarioReport> {
    let spec = InvolutionSpec::new(ty, m, n)?;
    let map = match case {
        HeisCase::UniIVEven | HeisCase::UniIVOdd => MapKind::Phi,
        _ => MapKind::Psi,
    };
    let involution = format!(
        "type {ty} (m = {m}, n = {n}): x* = {}, y* = {}, L* = L^{}",
        spec.x_image(),
        spec.y_image(),
        spec.lambda_exponent()
    );
    let title = format!("Heisenberg group ring, {}", case.summary());
    let mut r = ScenarioReport::new(case.id(), &title, involution, case.expected());
    let star = map.transported::<Q>(&spec)?;
    r.image("star(i)", &star.star_i);
    r.image("star(j)", &star.star_j);
    r.image("star(a)", &star.sigma.a);
    r.image("star(b)", &star.sigma.b);
    let mut c = Ctx {
        r: &mut r,
        spec,
        star,
        map,
        seed,
    };
    use HeisCase::*;
    match case {
        SymIEvenEven | SymII => sym_pair_uv(&mut c, case)?,
        SymIEvenOdd | SymIOddEven => sym_i_mixed(&mut c, case)?,
        SymIOddOdd | UniIEvenOrMixed => open_case(&mut c, case),
        SymIIIEven | SymIIIOdd => sym_iii(&mut c, case)?,
        SymIVEven | SymIVOdd => sym_iv(&mut c, case)?,
        UniIOddOdd | UniII => uni_cayley_pair(&mut c, case)?,
        UniIIIEven | UniIIIOdd => uni_iii(&mut c, case)?,
        UniIVEven | UniIVOdd => uni_iv(&mut c, case)?,
    }
    r.conclude();
    Ok(r)
}

fn open_case(c: &mut Ctx, case: HeisCase) {
    let conj = [q("i"), q("j"), q("i*j")].iter().all(|e| c.star.apply(e) == e.conj());
    c.r.check("transported involution fixes the center", c.star.sigma.is_identity());
    if case == HeisCase::SymIOddOdd {
        c.r.check("transported involution is quaternion conjugation", conj);
        c.r.note(
            "The transported involution is quaternion conjugation (symplectic type). Its symmetric \
elements are central, so the quaternion image has no free symmetric pair and the specialization \
method cannot produce one. No construction is known for this case.",
        );
    } else {
        c.r.check("transported involution is not quaternion conjugation", !conj);
        c.r.note(
            "The transported involution is of the first kind and orthogonal type. Its unitary \
elements in the quaternion image generate no free subgroup, so the specialization method cannot \
produce a free unitary pair. No construction is known for this case.",
        );
    }
}

/// `{1+x+x*, 1+y+y*}` for type I with m, n even and for type II.
fn sym_pair_uv(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let u = one().add(&x()).add(&c.st(&x()));
    let v = one().add(&y()).add(&c.st(&y()));
    c.r.element("u", &u);
    c.r.element("v", &v);
    c.symmetric_in_group_ring("u", &u);
    c.symmetric_in_group_ring("v", &v);
    let pu = c.img("u", &u);
    let pv = c.img("v", &v);
    c.symmetric("image of u", &pu);
    c.symmetric("image of v", &pv);
    c.r.target_pair = vec!["u".into(), "v".into()];
    let place = if case == HeisCase::SymII {
        c.r.compare("psi(u)", &q("1+(1+a^-1)*i"), &pu);
        c.r.compare("psi(v)", &q("1+(1+b^-1)*j"), &pv);
        place("P(1+(1+a^-1)i)", "i", "a", "a^2+a+1", "-a/(a+1)", "1+(1+a^-1)*i")
    } else {
        c.r.compare("psi(u)", &q("1+2*i"), &pu);
        c.r.compare("psi(v)", &q("1+2*j"), &pv);
        p_one_plus_2i()
    };
    c.certify(&pu.reg_rep(RepField::L), &pv.reg_rep(RepField::L), place, Strength::SubgroupWitness)?;
    c.sample(&pu, &pv, RepField::L)?;
    c.r.note(WITNESS_NOTE);
    c.r.note(
        "The place is chosen so that the image of u is a uniformizer; its conjugate is then a unit \
and the image of v has unit entries.",
    );
    Ok(())
}

/// Type I with m, n of different parity: `{u, v^-1 u v}` with `u` symmetric
/// and `v` a Cayley transform.
fn sym_i_mixed(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let (gu, gr) = if case == HeisCase::SymIEvenOdd { (x(), y()) } else { (y(), x()) };
    let u = one().add(&gu).add(&c.st(&gu));
    let r = gr.sub(&c.st(&gr));
    c.r.element("u", &u);
    c.r.element("r", &r);
    c.symmetric_in_group_ring("u", &u);
    c.antisymmetric_in_group_ring("r", &r);
    let pu = c.img("u", &u);
    let pr = c.img("r", &r);
    let pv = c.cayley("image of v = (1-r)(1+r)^-1", &pr)?;
    c.conjugate_pair(Mode::Symmetric, &pu, &pv, "u", "v")?;
    let (over, spec) = if case == HeisCase::SymIEvenOdd {
        c.r.compare("psi(u)", &q("1+2*i"), &pu);
        c.r.compare("psi(v)", &q("(1-2*j)^2/(1-4*b)"), &pv);
        (RepField::L, p_one_plus_2i())
    } else {
        c.r.compare("psi(u)", &q("1+2*j"), &pu);
        c.r.compare("psi(v)", &q("(1-2*i)^2/(1-4*a)"), &pv);
        (RepField::K, place("P(1+2j)", "j", "b", "1-4*b", "-1/2", "1+2*j"))
    };
    c.certify(&pu.reg_rep(over), &pv.reg_rep(over), spec, Strength::ExactPair)?;
    if over == RepField::K {
        c.r.note("The image of u lies in F(j), so the representation is taken over F(j) to make A diagonal.");
    }
    Ok(())
}

fn sym_iii(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let m = c.spec.m;
    let zeta = lam(m);
    let u = one().add(&x());
    let r = if case == HeisCase::SymIIIEven {
        x().mul(&mono(5, 0)).sub(&lam(5 * m).mul(&mono(-5, 0)).mul(&x()))
    } else {
        x().mul(&y()).sub(&zeta.mul(&mono(-1, 0)).mul(&x()))
    };
    c.r.element("u", &u);
    c.r.element("r", &r);
    c.symmetric_in_group_ring("u", &u);
    c.antisymmetric_in_group_ring("r", &r);
    let pu = c.img("u", &u);
    let pr = c.img("r", &r);
    let pv = c.cayley("image of v = (1-r)(1+r)^-1", &pr)?;
    c.conjugate_pair(Mode::Symmetric, &pu, &pv, "u", "v")?;
    c.r.compare("psi(u)", &q("1+i"), &pu);
    let a = pu.reg_rep(RepField::L);
    let b = pv.reg_rep(RepField::L);
    if case == HeisCase::SymIIIEven {
        let w = "(b^2+b^-3)";
        let stated = q(&format!("(1-{w}^2*a*b-2*{w}*i*j)/(1+{w}^2*a*b)"));
        c.r.compare("psi(v)", &stated, &pv);
        let l = a.get(0, 0).descriptor().clone();
        let e = |s: &str| crate::arith::parse::parse_ext(s, &l).expect("valid literal");
        let k = format!("(1+{w}^2*a*b)");
        let stated_b = SqMatrix::new(vec![
            vec![e(&format!("(1-{w}^2*a*b)/{k}")), e(&format!("-2*{w}*i/{k}"))],
            vec![e(&format!("2*{w}*b*i/{k}")), e(&format!("(1-{w}^2*a*b)/{k}"))],
        ])?;
        c.r.compare("B", &stated_b, &b);
        let stated_a = SqMatrix::diag(vec![e("1+i"), e("-1+i")]);
        c.r.compare("A", &stated_a, &a);
        c.r.note(
            "The representation of 1+i over F(i) is diag(1+i, 1-i). The stated A has -1+i in the \
second slot, which differs by the unit -1 and has the same valuation.",
        );
    } else {
        c.r.compare("psi(r)", &q("(1-b^-1)*i*j"), &pr);
        c.r.compare("psi(v)", &q("(1-(1-b^-1)*i*j)/(1+(1-b^-1)*i*j)"), &pv);
    }
    c.r.compare("N(1+i)", &q("1-a").coords()[0], &pu.reduced_norm());
    c.certify(&a, &b, place("P(1+i)", "i", "a", "1-a", "-1", "1+i"), Strength::ExactPair)
}

fn sym_iv(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let u = if case == HeisCase::SymIVEven {
        one().add(&x()).add(&c.st(&y()))
    } else {
        let naive = one().add(&x()).add(&c.st(&y()));
        let collapsed = c.map.apply(&naive);
        c.r.image("psi(1+x+y*)", &collapsed);
        c.r.check("psi(1+x+y*) collapses to a scalar", collapsed.coords()[1..].iter().all(|t| t.is_zero()));
        one().add(&x()).add(&lam(c.spec.m).mul(&c.st(&y())))
    };
    let us = c.st(&u);
    c.r.element("u", &u);
    c.r.element("u*", &us);
    if case == HeisCase::SymIVEven {
        c.r.check("u* = 1+x*+y", us == one().add(&c.st(&x())).add(&y()));
    } else {
        c.r.check("u = 1+2x", u == one().add(&x().scale(&Q::from_i64(2))));
    }
    let p1 = u.mul(&us);
    let p2 = us.mul(&u);
    c.symmetric_in_group_ring("u u*", &p1);
    c.symmetric_in_group_ring("u* u", &p2);
    let pu = c.img("u", &u);
    let pus = c.img("u*", &us);
    let pp1 = pu.mul(&pus);
    let pp2 = pus.mul(&pu);
    c.r.image("image of u u*", &pp1);
    c.r.image("image of u* u", &pp2);
    c.symmetric("image of u u*", &pp1);
    c.symmetric("image of u* u", &pp2);
    c.r.target_pair = vec!["u u*".into(), "u* u".into()];
    c.r.compare("psi(u)", &q("1+2*i"), &pu);
    let stated = if case == HeisCase::SymIVEven { "1+2*j" } else { "1-2*j" };
    c.r.compare("psi(u*)", &q(stated), &pus);
    c.certify(&pu.reg_rep(RepField::L), &pus.reg_rep(RepField::L), p_one_plus_2i(), Strength::SubgroupWitness)?;
    c.sample(&pp1, &pp2, RepField::L)?;
    c.r.note(
        "The certificate covers {A, B^-1 A B} with A, B the images of u and u*. The target pair \
{u u*, u* u} lies in the group they generate; its freeness is supported by the word sample only.",
    );
    Ok(())
}

/// Type I (m, n odd) and type II unitary: Cayley transforms of `x - x*` and
/// `y - y*`. The certified pair is `{u, v^-1 u v}`.
fn uni_cayley_pair(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let w1 = x().sub(&c.st(&x()));
    let w2 = y().sub(&c.st(&y()));
    c.r.element("x - x*", &w1);
    c.r.element("y - y*", &w2);
    c.antisymmetric_in_group_ring("x - x*", &w1);
    c.antisymmetric_in_group_ring("y - y*", &w2);
    let p1 = c.img("x - x*", &w1);
    let p2 = c.img("y - y*", &w2);
    let pu = c.cayley("image of u = (1-(x-x*))(1+(x-x*))^-1", &p1)?;
    let pv = c.cayley("image of v = (1-(y-y*))(1+(y-y*))^-1", &p2)?;
    c.conjugate_pair(Mode::Unitary, &pu, &pv, "u", "v")?;
    let spec = if case == HeisCase::UniIOddOdd {
        c.r.compare("psi(u)", &q("(1-2*i)^2/(1-4*a)"), &pu);
        c.r.compare("psi(v)", &q("(1-2*j)^2/(1-4*b)"), &pv);
        p_one_plus_2i()
    } else {
        let sa = q("(1-(1-a^-1)*i)^2/(1-(1-a^-1)^2*a)");
        let sb = q("(1-(1-b^-1)*j)^2/(1-(1-b^-1)^2*b)");
        c.r.compare("psi(u)", &sa, &pu);
        c.r.compare("psi(v)", &sb, &pv);
        place("P(1-(1-a^-1)i)", "i", "a", "a^2-3*a+1", "a/(a-1)", "1-(1-a^-1)*i")
    };
    c.certify(&pu.reg_rep(RepField::L), &pv.reg_rep(RepField::L), spec, Strength::ExactPair)?;
    c.sample(&pu, &pv, RepField::L)?;
    c.r.note(
        "The certified pair is {u, v^-1 u v}, built from the two unitary elements; both members are \
unitary. The word sample is run on {u, v} itself as additional evidence for that pair.",
    );
    Ok(())
}

fn uni_iii(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let w = y().sub(&c.st(&y()));
    let g = x().mul(&mono(if case == HeisCase::UniIIIEven { 5 } else { 1 }, 0));
    let z = g.sub(&c.st(&g));
    c.r.element("v = y - y*", &w);
    c.r.element("u = g - g*", &z);
    c.r.element("g", &g);
    c.antisymmetric_in_group_ring("y - y*", &w);
    c.antisymmetric_in_group_ring("g - g*", &z);
    let pw = c.img("y - y*", &w);
    let pz = c.img("g - g*", &z);
    let pr = c.cayley("image of r = (1-v)(1+v)^-1", &pw)?;
    let ps = c.cayley("image of s = (1-u)(1+u)^-1", &pz)?;
    c.conjugate_pair(Mode::Unitary, &pr, &ps, "r", "s")?;
    let a = pr.reg_rep(RepField::K);
    let b = ps.reg_rep(RepField::K);
    let k = a.get(0, 0).descriptor().clone();
    let e = |s: &str| crate::arith::parse::parse_ext(s, &k).expect("valid literal");
    let spec = if case == HeisCase::UniIIIEven {
        c.r.compare("psi(r)", &q("(b+(1-b)*j)^2/(-b+3*b^2-b^3)"), &pr);
        let w5 = "(b^-3+b^2)";
        let stated_s = q(&format!("(b^3+(1+b^5)*j*i)^2/(b^6*(1+{w5}^2*a*b))"));
        c.r.compare("psi(s)", &stated_s, &ps);
        let base_a = q("b+(1-b)*j").reg_rep(RepField::K);
        let stated_a = SqMatrix::diag(vec![e("1-b+j"), e("-1+b+j")]).scale(&e("j"));
        c.r.compare("representation of b+(1-b)j", &stated_a, &base_a);
        let base_b = q("b^3+(1+b^5)*j*i").reg_rep(RepField::K);
        let stated_b = SqMatrix::new(vec![
            vec![e("b^2*j"), e("1+b^5")],
            vec![e("-a*(1+b^5)"), e("b^2*j")],
        ])?
        .scale(&e("j"));
        c.r.compare("representation of b^3+(1+b^5)ji", &stated_b, &base_b);
        let beta = "(1+b^5)";
        let stated_b2 = SqMatrix::new(vec![
            vec![e(&format!("b^5-a*{beta}^2")), e(&format!("2*{beta}*b^2*j"))],
            vec![e(&format!("-2*a*{beta}*b^2*j")), e(&format!("b^5-a*{beta}^2"))],
        ])?
        .scale(&e("b"));
        c.r.compare("square of that representation", &stated_b2, &base_b.mul(&base_b));
        let alpha = q("-1+b+j");
        c.r.compare("N(alpha)", &q("1-3*b+b^2").coords()[0], &alpha.reduced_norm());
        let spec = place("P(alpha)", "j", "b", "b^2-3*b+1", "1-b", "-1+b+j");
        let pl = spec.build::<Q>()?;
        let nu = pl.valuation(&e("(-1+b+j)^2"))?;
        c.r.compare("nu(alpha^2)", &2, &nu);
        c.r.note(
            "A and B are the representations of the images of r and s themselves. They are central \
multiples of the squares of the representations of b+(1-b)j and b^3+(1+b^5)ji, with unit factors, \
so the valuation pattern matches that of the squared matrices.",
        );
        spec
    } else {
        c.r.compare("psi(r)", &q("(1-(1+b^-1)*j)^2/(1-(1+b^-1)^2*b)"), &pr);
        let stated_s = q("(1-b^-1*j*i)^2/(1+(b^-1-1)^2*a*b)");
        c.r.compare("psi(s)", &stated_s, &ps);
        c.r.compare("psi(s), corrected", &q("(1-(1-b^-1)*i*j)^2/(1+(1-b^-1)^2*a*b)"), &ps);
        c.r.note(
            "The image of g - g* is (1-b^-1)ij, so the image of s is (1+(b^-1-1)^2 ab)^-1 \
(1-(1-b^-1)ij)^2. The stated form has b^-1 ji inside the square, which is a different element.",
        );
        place("P(1-(1+b^-1)j)", "j", "b", "b^2+b+1", "b/(b+1)", "1-(1+b^-1)*j")
    };
    c.certify(&a, &b, spec, Strength::ExactPair)
}

fn uni_iv(c: &mut Ctx, case: HeisCase) -> Result<()> {
    let r0 = x().mul(&mono(-1, 0));
    let w = r0.sub(&c.st(&r0));
    let w2 = x().sub(&c.st(&x()));
    c.r.element("r = x y^-1", &r0);
    c.r.element("r*", c.st(&r0));
    c.r.element("r - r*", &w);
    c.r.element("x - x*", &w2);
    c.antisymmetric_in_group_ring("r - r*", &w);
    c.antisymmetric_in_group_ring("x - x*", &w2);
    let pw = c.img("r - r*", &w);
    let pw2 = c.img("x - x*", &w2);
    let pu = c.cayley("image of u = (1-(r-r*))(1+(r-r*))^-1", &pw)?;
    let pv = c.cayley("image of v = (1-(x-x*))(1+(x-x*))^-1", &pw2)?;
    c.conjugate_pair(Mode::Unitary, &pu, &pv, "u", "v")?;
    c.r.compare("phi(u)", &q("-(1+b+j)^2/(1+b+b^2)"), &pu);
    let a = pu.reg_rep(RepField::K);
    let b = pv.reg_rep(RepField::K);
    let k = a.get(0, 0).descriptor().clone();
    let e = |s: &str| crate::arith::parse::parse_ext(s, &k).expect("valid literal");
    if case == HeisCase::UniIVEven {
        c.r.compare("phi(v)", &q("(1-(1+j)*i)^2/(1-a+a*b)"), &pv);
        let base_b = q("1-(1+j)*i").reg_rep(RepField::K);
        let stated_b = SqMatrix::new(vec![vec![e("1"), e("-1-j")], vec![e("a*(-1+j)"), e("1")]])?;
        c.r.compare("representation of 1-(1+j)i", &stated_b, &base_b);
        let stated_b2 = SqMatrix::new(vec![
            vec![e("1+a-a*b"), e("-2*(1+j)")],
            vec![e("2*a*(-1+j)"), e("1+a-a*b")],
        ])?;
        c.r.compare("square of that representation", &stated_b2, &base_b.mul(&base_b));
        c.r.compare("N(-2(1+j))", &q("4*(1-b)").coords()[0], &q("-2*(1+j)").reduced_norm());
    } else {
        c.r.note("For m odd the image of x* changes sign, so v involves (1-j)i in place of (1+j)i.");
    }
    let stated_a = SqMatrix::diag(vec![e("1+b+j"), e("1+b-j")]);
    c.r.compare("representation of mu", &stated_a, &q("1+b+j").reg_rep(RepField::K));
    c.r.compare("N(mu)", &q("1+b+b^2").coords()[0], &q("1+b+j").reduced_norm());
    c.certify(&a, &b, place("P(mu)", "j", "b", "b^2+b+1", "-1-b", "1+b+j"), Strength::ExactPair)
}
