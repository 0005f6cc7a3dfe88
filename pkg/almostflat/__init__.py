from .bundle import CocycleBundle, flatness_audit
from .chern_karea import chern_number
from .config import DEFAULT_SETTINGS, Settings
from .fixtures import torus_complex, torus_substitution
from .quasirep import AlmostRep, bundle_to_rep, clock_shift, rep_to_bundle, substitute
from .simplicial import Complex, build_complex, presentation_from_tree
from .trivialize import trivialize, trivialize_contractible

__author__ = "Maxence Larose"
__version__ = "0.1.0"
__copyright__ = "Copyright 2026, Maxence Larose"
__credits__ = ["Maxence Larose"]
__license__ = "Apache-2.0"
__maintainer__ = "Maxence Larose"
__email__ = "maxence.larose.1@ulaval.ca"
__status__ = "Development"
