from ._exlie import *  # noqa: F401,F403
