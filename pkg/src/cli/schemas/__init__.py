from .algebra import MatrixPayload, MultivectorPayload, TensorPayload  # noqa: F401
from .forms import FormPayload  # noqa: F401
