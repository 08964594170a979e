from ._coxcoh import *  # noqa: F401,F403
