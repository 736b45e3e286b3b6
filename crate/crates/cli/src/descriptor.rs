//! Parsing of operator descriptors, knot generator specs, corpus
//! selectors and numeric list/range arguments.

use opbound_core::{
    corpus, FiniteRankOperator, Grid, KnotSequence, SampledFunction,
    make_bernstein, make_integral_schoenberg, make_kantorovich, make_schoenberg,
};

/// A usage/config problem; always maps to exit code 2.
pub type UsageError = String;

fn key_values(s: &str) -> Result<Vec<(&str, &str)>, UsageError> {
    // Splits `k=3,knots=uniform:8` at top-level commas; values may
    // contain colons.
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|pair| {
            pair.split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{pair}`"))
        })
        .collect()
}

/// Parse a knot generator spec: `uniform:<n>`, `chebyshev:<n>`,
/// `random:<n>:<seed>:<min-gauge>`, or a path to a knot file.
pub fn parse_knots(degree: usize, spec: &str) -> Result<KnotSequence, UsageError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let made = match parts[0] {
        "uniform" | "chebyshev" if parts.len() == 2 => {
            let n: usize = parts[1]
                .parse()
                .map_err(|e| format!("bad interval count in `{spec}`: {e}"))?;
            if parts[0] == "uniform" {
                KnotSequence::uniform(degree, n)
            } else {
                KnotSequence::chebyshev(degree, n)
            }
        }
        "random" if parts.len() == 4 => {
            let n: usize = parts[1]
                .parse()
                .map_err(|e| format!("bad interval count in `{spec}`: {e}"))?;
            let seed: u64 = parts[2]
                .parse()
                .map_err(|e| format!("bad seed in `{spec}`: {e}"))?;
            let gauge: f64 = parts[3]
                .parse()
                .map_err(|e| format!("bad min gauge in `{spec}`: {e}"))?;
            corpus::random_knots(degree, n, seed, gauge)
        }
        _ => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| format!("cannot read knot file `{spec}`: {e}"))?;
            let seq = KnotSequence::from_text(&text).map_err(|e| e.to_string())?;
            if seq.degree() != degree {
                return Err(format!(
                    "knot file `{spec}` has degree {}, descriptor says {degree}",
                    seq.degree()
                ));
            }
            Ok(seq)
        }
    };
    made.map_err(|e| e.to_string())
}

/// Parse an operator descriptor such as `bernstein:n=8`,
/// `kantorovich:n=8`, `schoenberg:k=3,knots=uniform:8` or
/// `integral-schoenberg:k=3,knots=<file>`.
pub fn parse_operator(desc: &str) -> Result<FiniteRankOperator, UsageError> {
    let (name, params) = desc
        .split_once(':')
        .ok_or_else(|| format!("descriptor `{desc}` missing `:`"))?;
    let kv = key_values(params)?;
    let get = |key: &str| -> Result<&str, UsageError> {
        kv.iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| format!("descriptor `{desc}` missing `{key}=`"))
    };
    match name {
        "bernstein" | "kantorovich" => {
            let n: usize = get("n")?
                .parse()
                .map_err(|e| format!("bad n in `{desc}`: {e}"))?;
            let made = if name == "bernstein" {
                make_bernstein(n)
            } else {
                make_kantorovich(n)
            };
            made.map_err(|e| e.to_string())
        }
        "schoenberg" | "integral-schoenberg" => {
            let k: usize = get("k")?
                .parse()
                .map_err(|e| format!("bad k in `{desc}`: {e}"))?;
            let seq = parse_knots(k, get("knots")?)?;
            let made = if name == "schoenberg" {
                make_schoenberg(seq)
            } else {
                make_integral_schoenberg(seq)
            };
            made.map_err(|e| e.to_string())
        }
        other => Err(format!("unknown operator `{other}`")),
    }
}

/// Generate the selected corpus on the given grid.
pub fn generate_corpus(selector: &str, grid: &Grid) -> Result<Vec<SampledFunction>, UsageError> {
    match selector {
        "standard" => Ok(corpus::standard_corpus(grid)),
        "polynomials" => Ok(corpus::polynomial_corpus(grid, 6)),
        "rough" => Ok(corpus::rough_corpus(grid)),
        other => {
            let path = other
                .strip_prefix("custom:")
                .ok_or_else(|| format!("unknown corpus selector `{other}`"))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read corpus file `{path}`: {e}"))?;
            let values: Vec<f64> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| l.parse::<f64>().map_err(|e| format!("bad value `{l}`: {e}")))
                .collect::<Result<_, _>>()?;
            if values.len() < 2 {
                return Err(format!("corpus file `{path}` needs at least 2 samples"));
            }
            let grid = Grid::uniform(values.len()).map_err(|e| e.to_string())?;
            let f = SampledFunction::from_values(
                format!("custom:{path}"),
                grid,
                values,
            )
            .map_err(|e| e.to_string())?;
            Ok(vec![f])
        }
    }
}

/// Parse `4,8,16` or an inclusive range `4..64`.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>, UsageError> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.parse().map_err(|e| format!("bad range `{s}`: {e}"))?;
        let b: usize = b.parse().map_err(|e| format!("bad range `{s}`: {e}"))?;
        if b < a {
            return Err(format!("empty range `{s}`"));
        }
        Ok((a..=b).collect())
    } else {
        s.split(',')
            .map(|p| p.trim().parse().map_err(|e| format!("bad value `{p}`: {e}")))
            .collect()
    }
}

/// Parse a comma-separated list of reals.
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>, UsageError> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|e| format!("bad value `{p}`: {e}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use opbound_core::OperatorKind;

    #[test]
    fn operator_descriptors() {
        let op = parse_operator("bernstein:n=8").unwrap();
        assert!(matches!(op.kind(), OperatorKind::Bernstein { n: 8 }));
        let op = parse_operator("kantorovich:n=5").unwrap();
        assert!(matches!(op.kind(), OperatorKind::Kantorovich { n: 5 }));
        let op = parse_operator("schoenberg:k=3,knots=uniform:8").unwrap();
        assert_eq!(op.knots().unwrap().degree(), 3);
        assert_eq!(op.knots().unwrap().interior_count(), 8);
        let op = parse_operator("integral-schoenberg:k=2,knots=random:6:42:0.02").unwrap();
        assert!(op.knots().unwrap().min_mesh_gauge() >= 0.02);

        assert!(parse_operator("fourier:n=3").is_err());
        assert!(parse_operator("bernstein").is_err());
        assert!(parse_operator("bernstein:n=zero").is_err());
    }

    #[test]
    fn knot_specs() {
        let seq = parse_knots(2, "uniform:4").unwrap();
        assert_eq!(seq.breakpoints(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        let seq = parse_knots(2, "chebyshev:4").unwrap();
        assert!(seq.breakpoints().windows(2).all(|w| w[1] > w[0]));
        assert!(parse_knots(2, "random:8:1:0.2").is_err());
        assert!(parse_knots(2, "/no/such/file").is_err());
    }

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_usize_list("4..8").unwrap(), vec![4, 5, 6, 7, 8]);
        assert_eq!(parse_usize_list("4,8,16").unwrap(), vec![4, 8, 16]);
        assert!(parse_usize_list("8..4").is_err());
        assert_eq!(parse_f64_list("0.05,0.1").unwrap(), vec![0.05, 0.1]);
    }
}
