from cvxdual._core import *  # noqa: F401,F403
from cvxdual._core import __version__  # noqa: F401
