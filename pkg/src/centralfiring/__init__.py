"""Central-firing on root-system weight lattices, computed exactly."""
from centralfiring.central import is_confluent_from, normal_forms, sweep
from centralfiring.rootsys import RootSystem, RootSystemType, build

__all__ = ["RootSystem", "RootSystemType", "build", "is_confluent_from", "normal_forms", "sweep"]
__version__ = "0.1.0"
