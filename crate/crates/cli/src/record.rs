use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use exop::eop::EopResult;

/// One polynomial on the wire. Rationals travel as `p/q` strings and the
/// coefficients are always those of `W_λ`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub partition: Vec<usize>,
    pub route: String,
    pub coefficients: Vec<String>,
}

impl PolynomialRecord {
    pub fn from_result(result: &EopResult) -> Self {
        let params = result
            .family
            .params()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let w = result.as_wronskian();
        let coefficients = if w.coeffs().is_empty() {
            vec!["0".to_string()]
        } else {
            w.coeffs().iter().map(ToString::to_string).collect()
        };
        Self {
            family: result.family.name().to_string(),
            params,
            partition: result.partition.parts().to_vec(),
            route: result.route.name().to_string(),
            coefficients,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exop::classical::Family;
    use exop::eop::{eop_by_route, Route};
    use exop::kernel::rational::parse_rational;
    use exop::kernel::rational::q;
    use exop::partitions::Partition;
    use exop::QPoly;

    fn polynomial(rec: &PolynomialRecord) -> QPoly {
        QPoly::new(rec.coefficients.iter().map(|c| parse_rational(c).unwrap()).collect())
    }

    #[test]
    fn records_round_trip() {
        let f = Family::jacobi(q(3, 4), q(-1, 3)).unwrap();
        let lambda: Partition = "2,1,1".parse().unwrap();
        for route in Route::ALL {
            let r = eop_by_route(&f, &lambda, route).unwrap();
            let rec = PolynomialRecord::from_result(&r);
            let text = serde_json::to_string(&rec).unwrap();
            let back: PolynomialRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, rec);
            assert_eq!(polynomial(&back), r.as_wronskian());
            assert_eq!(back.params["beta"], "-1/3");
        }
    }
}
