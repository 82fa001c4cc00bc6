from .numberfield import FieldElement, NumberField, factor_over_field, norm, primitive_element
from .splitting import DEFAULT_SPLITTING_CAP, SplittingData, splitting_data
