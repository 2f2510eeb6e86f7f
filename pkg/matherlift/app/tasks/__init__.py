from .chern import chern_classes, curve_resolution  # noqa
from .schubert import run_schubert_suite  # noqa
from .verdier import verdier_scenario  # noqa
