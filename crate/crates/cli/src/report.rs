//! JSON report assembly and CSV emission. Reports are deterministic:
//! no timestamps, fixed field order, and the same config always
//! produces byte-identical output.

use opbound_core::{BoundCertificate, DecayTrace, EigenPatternReport, Spectrum, TPReport};
use serde::Serialize;
use std::io::Write;
use std::path::Path;

#[derive(Serialize)]
pub struct SpectrumPayload {
    pub operator: String,
    pub eigenvalues: Vec<EigRow>,
    pub gamma: f64,
    pub unit_multiplicity: usize,
    pub spectral_location_ok: bool,
}

#[derive(Serialize)]
pub struct EigRow {
    pub real: f64,
    pub imag: f64,
    pub modulus: f64,
}

impl SpectrumPayload {
    pub fn new(operator: String, s: &Spectrum, location_ok: bool) -> Self {
        Self {
            operator,
            eigenvalues: s
                .eigenvalues
                .iter()
                .map(|l| EigRow {
                    real: l.re,
                    imag: l.im,
                    modulus: l.norm(),
                })
                .collect(),
            gamma: s.gamma,
            unit_multiplicity: s.unit_multiplicity,
            spectral_location_ok: location_ok,
        }
    }
}

#[derive(Serialize)]
pub struct TpPayload {
    pub source: String,
    #[serde(flatten)]
    pub report: TPReport,
    pub eigenvalues_distinct_positive_real: Option<bool>,
}

#[derive(Serialize)]
pub struct DecayPayload {
    pub operator: String,
    pub gamma: f64,
    pub c_fit: f64,
    pub fitted_rate: f64,
    pub paper_bound_holds: bool,
    pub m_max: usize,
}

#[derive(Serialize, Default)]
pub struct Summary {
    pub holds: usize,
    pub holds_with_slack: usize,
    pub violations: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigen_pattern: Option<EigenPatternReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<BoundCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tp: Option<TpPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decay: Option<DecayPayload>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: String) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION"),
            config,
            spectrum: None,
            eigen_pattern: None,
            certificates: Vec::new(),
            tp: None,
            decay: None,
            summary: Summary::default(),
        }
    }

    pub fn with_certificates(mut self, certs: Vec<BoundCertificate>) -> Self {
        for c in &certs {
            if !c.holds {
                self.summary.violations += 1;
            } else if c.holds_with_slack {
                self.summary.holds_with_slack += 1;
            } else {
                self.summary.holds += 1;
            }
        }
        self.certificates = certs;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Write report.json into `out` (a directory) or print to stdout.
    pub fn emit(&self, out: Option<&Path>) -> std::io::Result<()> {
        match out {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                let mut f = std::fs::File::create(dir.join("report.json"))?;
                writeln!(f, "{}", self.to_json())
            }
            None => {
                println!("{}", self.to_json());
                Ok(())
            }
        }
    }
}

pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::from("index,real,imag,modulus\n");
    for (i, l) in s.eigenvalues.iter().enumerate() {
        out.push_str(&format!("{i},{},{},{}\n", l.re, l.im, l.norm()));
    }
    out
}

pub fn decay_csv(trace: &DecayTrace) -> String {
    let mut out = String::from("m,rho_m,gamma_pow_m,gamma_pow_m_minus_1\n");
    for (i, rho) in trace.rhos.iter().enumerate() {
        let m = (i + 1) as f64;
        out.push_str(&format!(
            "{},{rho},{},{}\n",
            i + 1,
            trace.gamma.powf(m),
            trace.gamma.powf(m - 1.0)
        ));
    }
    out
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join(name), contents)
}
