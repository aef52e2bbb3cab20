use crate::config::KeyValues;
use crate::{Error, Result};

/// Embedded FPNI 30 nm reference table.
pub const FPNI_TABLE: &str = include_str!("../../data/fpni_30nm.tsv");

const KEYS: [&str; 14] = [
    "p_nano",
    "w_nano",
    "w_pin",
    "w_pinvar",
    "w_align",
    "w_sep",
    "r_closed",
    "on_off_ratio",
    "rho_nano",
    "l_nano",
    "r_nano",
    "c_per_len",
    "c_load",
    "geometry_factor",
];

/// Electrical and geometric parameters of the nanowire fabric.
///
/// Lengths are in nm and resistances in ohm. `w_pinvar` and `w_align` are
/// carried for reporting only; they do not enter the delay model.
#[derive(Debug, Clone, PartialEq)]
pub struct FpniParams {
    pub p_nano: f64,
    pub w_nano: f64,
    pub w_pin: f64,
    pub w_pinvar: f64,
    pub w_align: f64,
    pub w_sep: f64,
    pub r_closed: f64,
    pub on_off_ratio: f64,
    /// micro-ohm cm
    pub rho_nano: f64,
    pub l_nano: f64,
    /// Resistance of one full `l_nano` nanowire.
    pub r_nano: f64,
    /// Wire capacitance, F/m.
    pub c_per_len: f64,
    /// Input capacitance of the selection unit, F.
    pub c_load: f64,
    /// Routed length per pitch of tap distance.
    pub geometry_factor: f64,
}

impl Default for FpniParams {
    fn default() -> Self {
        Self::from_table(FPNI_TABLE).expect("embedded FPNI table is well formed")
    }
}

impl FpniParams {
    pub const DEFAULT_C_PER_LEN: f64 = 2e-10;
    pub const DEFAULT_C_LOAD: f64 = 1e-16;
    pub const MIN_ON_OFF_RATIO: f64 = 200.0;

    /// Reads the tabular reference format; knobs absent from the table get
    /// their built-in defaults.
    pub fn from_table(text: &str) -> Result<Self> {
        let mut kv = String::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split_whitespace();
            match (cols.next(), cols.next()) {
                (Some(key), Some(value)) => kv.push_str(&format!("fpni.{key} = {value}\n")),
                _ => return Err(Error::Config(format!("FPNI table: malformed row `{line}`"))),
            }
        }
        let kv = KeyValues::parse(&kv, "FPNI table")?;
        let mut params = FpniParams {
            p_nano: 0.0,
            w_nano: 0.0,
            w_pin: 0.0,
            w_pinvar: 0.0,
            w_align: 0.0,
            w_sep: 0.0,
            r_closed: 0.0,
            on_off_ratio: 0.0,
            rho_nano: 0.0,
            l_nano: 0.0,
            r_nano: 0.0,
            c_per_len: Self::DEFAULT_C_PER_LEN,
            c_load: Self::DEFAULT_C_LOAD,
            geometry_factor: 1.0,
        };
        for key in &KEYS[..11] {
            if !kv.contains(&format!("fpni.{key}")) {
                return Err(Error::Config(format!("FPNI table: missing `{key}`")));
            }
        }
        params.apply(&kv)?;
        Ok(params)
    }

    /// Overrides fields from `fpni.*` keys.
    pub fn apply(&mut self, kv: &KeyValues) -> Result<()> {
        kv.check_known("fpni", &KEYS)?;
        let fields: [(&str, &mut f64); 14] = [
            ("p_nano", &mut self.p_nano),
            ("w_nano", &mut self.w_nano),
            ("w_pin", &mut self.w_pin),
            ("w_pinvar", &mut self.w_pinvar),
            ("w_align", &mut self.w_align),
            ("w_sep", &mut self.w_sep),
            ("r_closed", &mut self.r_closed),
            ("on_off_ratio", &mut self.on_off_ratio),
            ("rho_nano", &mut self.rho_nano),
            ("l_nano", &mut self.l_nano),
            ("r_nano", &mut self.r_nano),
            ("c_per_len", &mut self.c_per_len),
            ("c_load", &mut self.c_load),
            ("geometry_factor", &mut self.geometry_factor),
        ];
        for (key, slot) in fields {
            if let Some(v) = kv.get::<f64>(&format!("fpni.{key}"))? {
                *slot = v;
            }
        }
        Ok(())
    }

    /// Checks physical ranges. Returns warnings for soft violations.
    pub fn validate(&self) -> Result<Vec<String>> {
        let positive = [
            ("p_nano", self.p_nano),
            ("w_nano", self.w_nano),
            ("w_pin", self.w_pin),
            ("w_pinvar", self.w_pinvar),
            ("w_align", self.w_align),
            ("w_sep", self.w_sep),
            ("r_closed", self.r_closed),
            ("rho_nano", self.rho_nano),
            ("l_nano", self.l_nano),
            ("r_nano", self.r_nano),
            ("c_per_len", self.c_per_len),
            ("c_load", self.c_load),
            ("geometry_factor", self.geometry_factor),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Config(format!("fpni.{name} must be positive, got {v}")));
            }
        }
        let mut warnings = Vec::new();
        if self.on_off_ratio < Self::MIN_ON_OFF_RATIO {
            warnings.push(format!(
                "fpni.on_off_ratio = {} is below the fabric's {} floor",
                self.on_off_ratio,
                Self::MIN_ON_OFF_RATIO
            ));
        }
        Ok(warnings)
    }

    /// `r_nano` scaled to a wire of `len_nm`.
    pub fn wire_resistance(&self, len_nm: f64) -> f64 {
        self.r_nano * len_nm / self.l_nano
    }

    pub fn wire_capacitance(&self, len_nm: f64) -> f64 {
        self.c_per_len * len_nm * 1e-9
    }

    /// Capacitance of one full-length nanowire.
    pub fn nanowire_capacitance(&self) -> f64 {
        self.wire_capacitance(self.l_nano)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_reference_table() {
        let p = FpniParams::default();
        assert_eq!(p.p_nano, 30.0);
        assert_eq!(p.w_nano, 15.0);
        assert_eq!(p.w_pin, 90.0);
        assert_eq!(p.w_pinvar, 20.0);
        assert_eq!(p.w_align, 40.0);
        assert_eq!(p.w_sep, 15.0);
        assert_eq!(p.r_closed, 24e3);
        assert_eq!(p.l_nano, 7115.0);
        assert_eq!(p.r_nano, 2.53e3);
        assert_eq!(p.rho_nano, 8.0);
        assert_eq!(p.c_per_len, 2e-10);
        assert!(p.validate().unwrap().is_empty());
    }

    #[test]
    fn nanowire_resistance_consistent_with_resistivity() {
        // R = rho * L / (w * w) for a square cross-section of width w_nano.
        let p = FpniParams::default();
        let rho_ohm_m = p.rho_nano * 1e-8;
        let area = (p.w_nano * 1e-9).powi(2);
        let r = rho_ohm_m * p.l_nano * 1e-9 / area;
        assert!((r - p.r_nano).abs() / p.r_nano < 0.01, "{r}");
    }

    #[test]
    fn overrides_and_validation() {
        let mut p = FpniParams::default();
        let kv = KeyValues::parse("fpni.c_per_len = 3e-10\nfpni.on_off_ratio = 50\n", "t").unwrap();
        p.apply(&kv).unwrap();
        assert_eq!(p.c_per_len, 3e-10);
        assert_eq!(p.validate().unwrap().len(), 1);

        let kv = KeyValues::parse("fpni.r_closed = -1\n", "t").unwrap();
        p.apply(&kv).unwrap();
        assert!(p.validate().is_err());

        let kv = KeyValues::parse("fpni.bogus = 1\n", "t").unwrap();
        assert!(p.apply(&kv).is_err());
    }

    #[test]
    fn malformed_table_rejected() {
        assert!(FpniParams::from_table("p_nano\n").is_err());
        assert!(FpniParams::from_table("p_nano 30 nm pitch\n").is_err());
    }
}
