from .extension import ExtensionMethod, cone_extend_vector, cone_sources, unitary_extend
from .unitary_map import (
    SampledMap,
    SampledUnitaryMap,
    constant_map,
    from_function,
    identity_map,
    pointwise_product
)
