"""Exact construction and verification of regular polygonal complexes in E^3."""

from .catalog import CATALOG_IDS, build_entry, generator_system
from .geometry import Isometry, OrthoMatrix, classify, compose, iso
from .kernel import BACKEND
from .verify import verify_entry
from .wythoff import Box, Complex, Face, GeneratorSystem, base_face, build

__all__ = [
    "BACKEND",
    "Box",
    "CATALOG_IDS",
    "Complex",
    "Face",
    "GeneratorSystem",
    "Isometry",
    "OrthoMatrix",
    "base_face",
    "build",
    "build_entry",
    "classify",
    "compose",
    "generator_system",
    "iso",
    "verify_entry",
]
