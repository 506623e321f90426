use ainvariant_core::bounds::{verify_main_bound, verify_prop_3_1};
use ainvariant_core::filtration::{
    fiber_cone_series, minimal_reduction_sg, mu, reduction_number_wrt_sg, DEFAULT_COEFF_BOUND,
};
use ainvariant_core::hilbert::hilbert_data;
use ainvariant_core::semigroup::{multiplicity_sg, reduction_number_sg, rr_power_sg};
use ainvariant_core::{
    CohomologyTable, Error, NumericalSemigroup, PolyRing, SemigroupIdeal, Status,
};
use serde_json::{json, Map, Value};

use crate::args::Example;
use crate::commands::{big, series_json};

/// Expected-versus-actual pairs plus the named fields of the report.
struct Checks {
    fields: Map<String, Value>,
    rows: Vec<Value>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            fields: Map::new(),
            rows: Vec::new(),
        }
    }

    fn field(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }

    fn check(&mut self, name: &str, expected: Value, actual: Value) {
        let ok = expected == actual;
        self.rows.push(json!({"check": name, "expected": expected, "actual": actual, "ok": ok}));
    }

    fn finish(mut self) -> (Value, bool) {
        let ok = self.rows.iter().all(|r| r["ok"] == json!(true));
        self.fields.insert("checks".into(), Value::Array(self.rows));
        self.fields.insert("all_ok".into(), json!(ok));
        (Value::Object(self.fields), ok)
    }
}

/// Returns the report and whether every check matched.
pub fn run(example: Example) -> Result<(Value, bool), Error> {
    match example {
        Example::FiberCone => fiber_cone_example(),
        Example::Semigroup => semigroup_example(),
    }
}

fn fiber_cone_example() -> Result<(Value, bool), Error> {
    let mut c = Checks::new();
    c.field("example", json!("example-2.2"));

    let plane = PolyRing::parse("x,y")?;
    let i = plane.parse_ideal("x^3, x^2*y^4, x*y^5, y^7")?;
    let mus: Vec<usize> = (1..=6).map(|n| mu(&i, n)).collect::<Result<_, _>>()?;
    let fiber = fiber_cone_series(&i, 12)?;
    c.field("ideal_i", json!(plane.format_ideal(&i)));
    c.field("mu", json!(mus));
    c.field("fiber_cone", series_json(&fiber));
    c.check("mu(I^n) = 3n+1, n = 1..6", json!([4, 7, 10, 13, 16, 19]), json!(mus));
    c.check(
        "fiber cone reduced numerator",
        json!([1, 2]),
        json!(fiber.reduced_numerator().iter().map(big).collect::<Vec<_>>()),
    );
    c.check("fiber cone dimension", json!(2), json!(fiber.dim()));

    let ring = PolyRing::parse("a,b,c,d")?;
    let n = ring.parse_ideal("b*d, b*c, b^2, c^3")?;
    let j = ring.parse_ideal("b, c^3")?;
    let k = ring.parse_ideal("c, d, b^2")?;
    let meet = j.intersection(&k)?;
    c.field("ideal_n", json!(ring.format_ideal(&n)));
    c.check("(b,c^3) ∩ (c,d,b^2) = N", json!(ring.format_ideal(&n)), json!(ring.format_ideal(&meet)));

    let data = hilbert_data(&n)?;
    let table = CohomologyTable::compute(&n)?;
    c.field("hilbert", series_json(&data.series));
    c.field("dim", json!(data.dim));
    c.field("e", json!(data.multiplicity));
    c.field("depth", json!(table.depth()));
    c.field("a", json!(table.a_invariant()));
    c.field("h1_0", json!(table.h(1, 0)));
    c.field("eg", json!(table.eg()));
    c.check(
        "reduced numerator of R/N",
        json!([1, 2]),
        json!(data.series.reduced_numerator().iter().map(big).collect::<Vec<_>>()),
    );
    c.check("dim R/N", json!(2), json!(data.dim));
    c.check("e(R/N)", json!(3), json!(data.multiplicity));
    c.check("depth R/N", json!(1), json!(table.depth()));
    c.check("a(R/N)", json!(0), json!(table.a_invariant()));
    c.check("h^1(R/N)_0", json!(1), json!(table.h(1, 0)));
    c.check("EG(R/N)", json!(1), json!(table.eg()));

    let aux = [
        ("R/J", j.clone()),
        ("R/K", k.clone()),
        ("R/(J+K)", j.sum(&k)?),
    ];
    let mut aux_a = Map::new();
    for (name, q) in &aux {
        aux_a.insert(name.to_string(), json!(CohomologyTable::compute(q)?.a_invariant()));
    }
    c.check("a-invariants of R/J, R/K, R/(J+K)", json!([0, 0, -1]), json!(aux_a.values().collect::<Vec<_>>()));
    c.field("aux_a", Value::Object(aux_a));

    let bound = verify_main_bound("N", &n)?;
    let sharp = bound.status == Status::Sharp;
    c.field("main_bound", serde_json::to_value(&bound).expect("report serializes"));
    c.field("sharp", json!(sharp));
    c.check("main bound lhs, rhs", json!([0, 0]), json!([bound.lhs, bound.rhs]));
    c.check("main bound sharp", json!(true), json!(sharp));
    Ok(c.finish())
}

fn semigroup_example() -> Result<(Value, bool), Error> {
    let mut c = Checks::new();
    c.field("example", json!("example-3.2"));
    let s = NumericalSemigroup::new(&[4, 5, 6, 7])?;
    let i = SemigroupIdeal::new(&s, &[4, 5, 6])?;
    let m = s.maximal_ideal();
    let i2 = i.power(2);
    let rr2 = rr_power_sg(&i, 2)?;
    let (r, jmin) = reduction_number_sg(&i)?;
    let e = multiplicity_sg(&i);
    let l_i_i2 = i.length_over(&i2)?;
    let generic = minimal_reduction_sg(&i, 0, DEFAULT_COEFF_BOUND);
    let r_generic = reduction_number_wrt_sg(&generic, &i, e as u32 + 2)?;
    let bound = verify_prop_3_1("I", &i)?;
    let sharp = bound.status == Status::Sharp;

    c.field("semigroup", json!(s.generators()));
    c.field("ideal", json!(i.generators()));
    c.field("r", json!(r));
    c.field("reduction", json!(format!("t^{jmin}")));
    c.field("e", json!(e));
    c.field("l_r_i", json!(i.colength()));
    c.field("l_r_i2", json!(i2.colength()));
    c.field("l_i_i2", json!(l_i_i2));
    c.field("generic_r", json!(r_generic));
    c.field("dim_one_bound", serde_json::to_value(&bound).expect("report serializes"));
    c.field("sharp", json!(sharp));

    c.check("I^2 = m^2", json!(true), json!(i2 == m.power(2)));
    c.check("Ratliff-Rush closure of I^2 is I^2", json!(true), json!(rr2 == i2));
    c.check("e(I)", json!(4), json!(e));
    c.check("l(R/I)", json!(2), json!(i.colength()));
    c.check("l(R/I^2)", json!(5), json!(i2.colength()));
    c.check("l(I/I^2)", json!(3), json!(l_i_i2));
    c.check("r with J = (t^4)", json!(2), json!(r));
    c.check("r with a generic J", json!(2), json!(r_generic));
    c.check("dimension-one bound: r, middle term", json!([2, 2]), json!([bound.lhs, bound.rhs]));
    c.check("dimension-one bound sharp", json!(true), json!(sharp));
    Ok(c.finish())
}
