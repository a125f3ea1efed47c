"""Example registry, randomized property suite and grid oracle."""
from .oracle import grid_agreement, grid_oracle
from .properties import PropertyConfig, PropertyReport, run_properties
from .registry import ExampleReport, example_ids, run_example

__all__ = ["ExampleReport", "PropertyConfig", "PropertyReport", "example_ids",
           "grid_agreement", "grid_oracle", "run_example", "run_properties"]
