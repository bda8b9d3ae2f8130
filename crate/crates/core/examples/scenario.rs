//! Run a scenario given as JSON and print the text and JSON reports.
//!
//! The point `sqrt-t` has residue field QQ(sqrt t); cotangent spaces over
//! such fields are not computed, so its verdict is Unknown.

use regloc::scenario::{run_scenario, Scenario};

const SCENARIO: &str = r#"{
  "name": "node",
  "description": "a nodal cubic deforming to a smooth one",
  "field": {"characteristic": 0, "transcendentals": []},
  "base": {"value_group": "zn_lex", "params": ["t"]},
  "algebra": {"vars": ["x", "y"], "relations": ["y^2 - x^2 - x^3 - t"]},
  "points": [
    {"name": "node", "base_prime": "N", "generators": ["x", "y"]},
    {"name": "sqrt-t", "base_prime": "0", "generators": ["x", "y^2 - t"]}
  ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sc = Scenario::from_json(SCENARIO)?;
    let report = run_scenario(&sc, true)?;
    print!("{}", report.to_text());
    print!("{}", report.to_json());
    Ok(())
}
