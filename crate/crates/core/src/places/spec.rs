use serde::{Deserialize, Serialize};

use super::Place;
use crate::arith::parse::{parse_ext, parse_ratfunc, parse_unipoly};
use crate::arith::{ExtDescriptor, Scalar, Var};
use crate::error::{Error, Result};

/// Textual description of a place, as read from JSON.
///
/// ```json
/// {"name": "P(1+i)", "field": "Q", "generator": "i", "minpoly": "i^2-a",
///  "base_var": "a", "base_prime": "1-a", "gen_image": "-1", "uniformizer": "1+i"}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceSpec {
    pub name: String,
    #[serde(default = "default_field")]
    pub field: String,
    pub generator: String,
    pub minpoly: String,
    pub base_var: String,
    pub base_prime: String,
    pub gen_image: String,
    pub uniformizer: String,
}

fn default_field() -> String {
    "Q".into()
}

impl PlaceSpec {
    pub fn build<F: Scalar>(&self) -> Result<Place<F>> {
        let field = F::base_field().to_string();
        if self.field != field {
            return Err(Error::InvalidSpec(format!(
                "place {} is over {}, expected {field}",
                self.name, self.field
            )));
        }
        let desc = ExtDescriptor::new(&self.generator, parse_unipoly(&self.minpoly, &self.generator)?.monic())?;
        let base_var = Var::from_name(&self.base_var)
            .filter(|v| matches!(v, Var::A | Var::B))
            .ok_or_else(|| Error::InvalidSpec(format!("base_var must be a or b, got {}", self.base_var)))?;
        let prime = parse_ratfunc::<F>(&self.base_prime)?;
        if !prime.is_poly() {
            return Err(Error::InvalidSpec(format!("base prime {} is not a polynomial", self.base_prime)));
        }
        let residue = Place::residue_field_for(base_var, prime.num())?;
        let gen_image = parse_ext(&self.gen_image, &residue)?;
        let pi = parse_ext(&self.uniformizer, &desc)?;
        Place::new(&self.name, &desc, base_var, prime.num(), &gen_image, &pi)
    }
}
