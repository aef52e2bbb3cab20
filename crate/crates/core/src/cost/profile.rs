use std::fmt;
use std::str::FromStr;

use crate::config::KeyValues;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DesignKind {
    Proposed,
    Systolic,
    RaceCmos,
}

impl DesignKind {
    pub const ALL: [DesignKind; 3] = [DesignKind::Proposed, DesignKind::Systolic, DesignKind::RaceCmos];

    pub fn name(self) -> &'static str {
        match self {
            DesignKind::Proposed => "proposed",
            DesignKind::Systolic => "systolic",
            DesignKind::RaceCmos => "race_cmos",
        }
    }
}

impl fmt::Display for DesignKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DesignKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DesignKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown design kind `{s}`")))
    }
}

const FIELDS: [&str; 7] = [
    "unit_delay_s",
    "cycle_time_s",
    "per_cell_area",
    "per_cell_cap",
    "vdd",
    "activity",
    "freq",
];

/// Physical constants for one design.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviceProfile {
    pub kind: DesignKind,
    /// Seconds per logical delay unit (race-logic designs).
    pub unit_delay_s: f64,
    /// Clock period (systolic only).
    pub cycle_time_s: f64,
    pub per_cell_area: f64,
    /// Switched capacitance per cell or processing element, F.
    pub per_cell_cap: f64,
    pub vdd: f64,
    pub activity: f64,
    pub freq: f64,
}

impl DeviceProfile {
    /// Uncalibrated defaults. Both race-logic designs share one unit delay.
    pub fn default_for(kind: DesignKind) -> Self {
        match kind {
            DesignKind::Proposed => DeviceProfile {
                kind,
                unit_delay_s: 1e-9,
                cycle_time_s: 1e-9,
                per_cell_area: 851.0,
                per_cell_cap: 1e-17,
                vdd: 1.0,
                activity: 0.5,
                freq: 1e9,
            },
            DesignKind::Systolic => DeviceProfile {
                kind,
                unit_delay_s: 1e-8,
                cycle_time_s: 1e-8,
                per_cell_area: 7.34e4,
                per_cell_cap: 5e-14,
                vdd: 1.2,
                activity: 0.5,
                freq: 1e8,
            },
            DesignKind::RaceCmos => DeviceProfile {
                kind,
                unit_delay_s: 1e-9,
                cycle_time_s: 1e-9,
                per_cell_area: 9.18e3,
                per_cell_cap: 2e-15,
                vdd: 1.2,
                activity: 0.5,
                freq: 1e9,
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        let named = [
            ("unit_delay_s", self.unit_delay_s),
            ("cycle_time_s", self.cycle_time_s),
            ("per_cell_area", self.per_cell_area),
            ("per_cell_cap", self.per_cell_cap),
            ("vdd", self.vdd),
            ("freq", self.freq),
        ];
        for (name, v) in named {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Config(format!("{}.{name} must be positive, got {v}", self.kind)));
            }
        }
        if !(self.activity > 0.0 && self.activity <= 1.0) {
            return Err(Error::Config(format!(
                "{}.activity must lie in (0, 1], got {}",
                self.kind, self.activity
            )));
        }
        Ok(())
    }

    fn apply(&mut self, kv: &KeyValues) -> Result<()> {
        let prefix = self.kind.name();
        kv.check_known(prefix, &FIELDS)?;
        let slots: [(&str, &mut f64); 7] = [
            ("unit_delay_s", &mut self.unit_delay_s),
            ("cycle_time_s", &mut self.cycle_time_s),
            ("per_cell_area", &mut self.per_cell_area),
            ("per_cell_cap", &mut self.per_cell_cap),
            ("vdd", &mut self.vdd),
            ("activity", &mut self.activity),
            ("freq", &mut self.freq),
        ];
        for (field, slot) in slots {
            if let Some(v) = kv.get::<f64>(&format!("{prefix}.{field}"))? {
                *slot = v;
            }
        }
        Ok(())
    }

    fn write_to(&self, out: &mut String) {
        let values = [
            self.unit_delay_s,
            self.cycle_time_s,
            self.per_cell_area,
            self.per_cell_cap,
            self.vdd,
            self.activity,
            self.freq,
        ];
        for (field, v) in FIELDS.iter().zip(values) {
            out.push_str(&format!("{}.{field} = {v:e}\n", self.kind));
        }
    }
}

/// One profile per design kind.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSet {
    pub proposed: DeviceProfile,
    pub systolic: DeviceProfile,
    pub race_cmos: DeviceProfile,
}

impl Default for ProfileSet {
    fn default() -> Self {
        ProfileSet {
            proposed: DeviceProfile::default_for(DesignKind::Proposed),
            systolic: DeviceProfile::default_for(DesignKind::Systolic),
            race_cmos: DeviceProfile::default_for(DesignKind::RaceCmos),
        }
    }
}

impl ProfileSet {
    pub fn get(&self, kind: DesignKind) -> &DeviceProfile {
        match kind {
            DesignKind::Proposed => &self.proposed,
            DesignKind::Systolic => &self.systolic,
            DesignKind::RaceCmos => &self.race_cmos,
        }
    }

    pub fn get_mut(&mut self, kind: DesignKind) -> &mut DeviceProfile {
        match kind {
            DesignKind::Proposed => &mut self.proposed,
            DesignKind::Systolic => &mut self.systolic,
            DesignKind::RaceCmos => &mut self.race_cmos,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &DeviceProfile> {
        [&self.proposed, &self.systolic, &self.race_cmos].into_iter()
    }

    /// Overrides defaults with any `<kind>.<field>` keys present.
    pub fn apply(&mut self, kv: &KeyValues) -> Result<()> {
        for kind in DesignKind::ALL {
            self.get_mut(kind).apply(kv)?;
        }
        self.iter().try_for_each(DeviceProfile::validate)
    }

    pub fn from_key_values(kv: &KeyValues) -> Result<Self> {
        let mut set = ProfileSet::default();
        set.apply(kv)?;
        Ok(set)
    }

    /// Serializes back to the key-value format.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        for p in self.iter() {
            p.write_to(&mut out);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        for k in DesignKind::ALL {
            assert_eq!(k.name().parse::<DesignKind>().unwrap(), k);
        }
        assert!("fpga".parse::<DesignKind>().is_err());
    }

    #[test]
    fn defaults_are_valid() {
        ProfileSet::default().iter().for_each(|p| p.validate().unwrap());
    }

    #[test]
    fn overrides_apply_per_kind() {
        let kv = KeyValues::parse("race_cmos.unit_delay_s = 5e-9\nsystolic.cycle_time_s = 2e-8\n", "t").unwrap();
        let set = ProfileSet::from_key_values(&kv).unwrap();
        assert_eq!(set.race_cmos.unit_delay_s, 5e-9);
        assert_eq!(set.systolic.cycle_time_s, 2e-8);
        assert_eq!(set.proposed, DeviceProfile::default_for(DesignKind::Proposed));
    }

    #[test]
    fn rejects_bad_values() {
        for text in ["proposed.activity = 0\n", "proposed.activity = 1.5\n", "systolic.vdd = -1\n", "proposed.speed = 3\n"] {
            let kv = KeyValues::parse(text, "t").unwrap();
            assert!(ProfileSet::from_key_values(&kv).is_err(), "{text}");
        }
    }

    #[test]
    fn serialization_round_trips() {
        let set = ProfileSet::default();
        let kv = KeyValues::parse(&set.to_key_values(), "t").unwrap();
        assert_eq!(ProfileSet::from_key_values(&kv).unwrap(), set);
    }
}
