//! Compile declarative KPI and visualization definitions into a
//! tool-agnostic virtual dashboard, then into Grafana dashboards and an HTML
//! preview.
//!
//! The pipeline has three stages:
//!
//! 1. [`definition`]: parse and validate the YAML definition and resolve it
//!    into a forest of visualizations.
//! 2. [`layout`]: arrange the forest with a meta-model layout (pyramidal,
//!    repeated or nested) into an [`ir::VirtualDashboard`].
//! 3. [`render`]: emit concrete artifacts from the virtual dashboard.

pub mod cli;
pub mod definition;
pub mod ir;
pub mod layout;
pub mod render;
mod slug;

pub use slug::slugify;
