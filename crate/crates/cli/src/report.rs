use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Arclength,
    Surface,
    Volume,
    #[value(name = "area_scale")]
    AreaScale,
    Circumference,
    Area,
}

impl Quantity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quantity::Arclength => "arclength",
            Quantity::Surface => "surface",
            Quantity::Volume => "volume",
            Quantity::AreaScale => "area_scale",
            Quantity::Circumference => "circumference",
            Quantity::Area => "area",
        }
    }
}

/// One measurement: up to three independent values and their disagreements.
///
/// Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub quantity: Quantity,
    pub analytic: Option<f64>,
    pub quadrature: Option<f64>,
    pub oracle: Option<f64>,
    pub abs_err_quad: Option<f64>,
    pub abs_err_oracle: Option<f64>,
    pub params: Value,
}

impl MeasureReport {
    /// Builds a report; error fields are filled exactly when both operands exist.
    ///
    /// With no analytic value the oracle error is measured against quadrature.
    pub fn new(
        quantity: Quantity,
        analytic: Option<f64>,
        quadrature: Option<f64>,
        oracle: Option<f64>,
        params: Value,
    ) -> Self {
        assert!(analytic.is_some() || quadrature.is_some() || oracle.is_some());
        let abs_err_quad = analytic.zip(quadrature).map(|(a, q)| (a - q).abs());
        let abs_err_oracle = analytic.or(quadrature).zip(oracle).map(|(r, o)| (r - o).abs());
        Self { quantity, analytic, quadrature, oracle, abs_err_quad, abs_err_oracle, params }
    }

    pub const CSV_HEADER: &'static str = "quantity,analytic,quadrature,oracle,abs_err_quad,abs_err_oracle";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.quantity.as_str(),
            format::opt_value(self.analytic),
            format::opt_value(self.quadrature),
            format::opt_value(self.oracle),
            format::opt_error(self.abs_err_quad),
            format::opt_error(self.abs_err_oracle),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}
