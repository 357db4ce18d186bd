use num_rational::Ratio;
use serde::Deserialize;
use thiserror::Error;

use crate::ir::LayoutStyle;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid layout configuration: {0}")]
    Yaml(#[from] serde_yaml::Error),
    #[error("invalid layout configuration: {0}")]
    Invalid(String),
}

/// Meta-model choice plus the grid knobs the layouts use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutConfig {
    pub style: LayoutStyle,
    pub grid_columns: u32,
    /// Height of one visualization tile, in grid rows.
    pub base_panel_height: u32,
    /// Children per row (Pyramidal) or cells per row (Nested).
    pub per_row: u32,
    pub max_depth: usize,
    /// Width share of the parent tile in the Repeated style.
    pub parent_ratio: Ratio<i64>,
    /// Empty rows between stacked items.
    pub item_gap: u32,
}

impl LayoutConfig {
    pub fn new(style: LayoutStyle) -> Self {
        Self {
            style,
            grid_columns: 24,
            base_panel_height: 8,
            per_row: 4,
            max_depth: 3,
            parent_ratio: Ratio::new(1, 3),
            item_gap: 1,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let fail = |msg: &str| Err(ConfigError::Invalid(msg.to_string()));
        if self.grid_columns == 0 {
            return fail("grid_columns must be positive");
        }
        if self.base_panel_height == 0 {
            return fail("base_panel_height must be positive");
        }
        if self.per_row == 0 {
            return fail("per_row must be positive");
        }
        if self.per_row > self.grid_columns {
            return fail("per_row must not exceed grid_columns");
        }
        if self.max_depth == 0 {
            return fail("max_depth must be positive");
        }
        if self.parent_ratio <= Ratio::from_integer(0)
            || self.parent_ratio >= Ratio::from_integer(1)
        {
            return fail("parent_ratio must lie strictly between 0 and 1");
        }
        Ok(())
    }

    /// Read a YAML configuration file. Only `style` is required.
    pub fn from_yaml(text: &str) -> Result<Self, ConfigError> {
        Self::from_yaml_with_style(text, None)
    }

    /// Like [`LayoutConfig::from_yaml`], but `style` overrides the file's
    /// `style` key, which then becomes optional.
    pub fn from_yaml_with_style(
        text: &str,
        style: Option<LayoutStyle>,
    ) -> Result<Self, ConfigError> {
        let raw: RawConfig = serde_yaml::from_str(text)?;
        let style = style
            .or(raw.style)
            .ok_or_else(|| ConfigError::Invalid("missing required key `style`".into()))?;
        let mut cfg = Self::new(style);
        if let Some(v) = raw.grid_columns {
            cfg.grid_columns = v;
        }
        if let Some(v) = raw.base_panel_height {
            cfg.base_panel_height = v;
        }
        if let Some(v) = raw.per_row {
            cfg.per_row = v;
        }
        if let Some(v) = raw.max_depth {
            cfg.max_depth = v;
        }
        if let Some(v) = raw.item_gap {
            cfg.item_gap = v;
        }
        if let Some(v) = raw.parent_ratio {
            cfg.parent_ratio = v.to_ratio()?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    style: Option<LayoutStyle>,
    grid_columns: Option<u32>,
    base_panel_height: Option<u32>,
    per_row: Option<u32>,
    max_depth: Option<usize>,
    parent_ratio: Option<RawRatio>,
    item_gap: Option<u32>,
}

/// `parent_ratio: 1/3` or `parent_ratio: 0.25`.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawRatio {
    Number(f64),
    Text(String),
}

impl RawRatio {
    fn to_ratio(&self) -> Result<Ratio<i64>, ConfigError> {
        let bad =
            || ConfigError::Invalid("parent_ratio must be a fraction like 1/3 or a decimal".into());
        match self {
            RawRatio::Number(f) => Ratio::approximate_float(*f).ok_or_else(bad),
            RawRatio::Text(s) => {
                let s = s.trim();
                match s.split_once('/') {
                    Some((n, d)) => {
                        let n: i64 = n.trim().parse().map_err(|_| bad())?;
                        let d: i64 = d.trim().parse().map_err(|_| bad())?;
                        if d == 0 {
                            return Err(bad());
                        }
                        Ok(Ratio::new(n, d))
                    }
                    None => s
                        .parse::<f64>()
                        .ok()
                        .and_then(Ratio::approximate_float)
                        .ok_or_else(bad),
                }
            }
        }
    }
}
