"""Homology of directed path spaces of pre-cubical sets via cube chains."""

from .errors import BudgetExceeded, EnumerationError, PCSError
from .pcs import Cube, PrecubicalSet, is_covering_proper, is_proper, validate_precubical
from .ingest import GridSpec, generate_grid_complex, parse_pcs, serialize_pcs
from .chains import build_poset, enumerate_chains
from .permutohedra import fundamental_cycle, ordered_partitions
from .cellular import assemble_complex, cell_cycle, cellular_boundary
from .homology import HomologyReport, smith_normal_form
from .pipeline import oracle, path_space_model

__version__ = "0.1.0"
