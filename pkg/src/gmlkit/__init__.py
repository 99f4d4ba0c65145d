"""gmlkit: cut enumeration and verification for twisted prismatic tori.

The package pairs closed-form counting rules with a brute-force planar
arrangement oracle, simulates full cuts of twisted bodies, and exports
sampled curves and meshes.
"""

__version__ = "0.1.0"
