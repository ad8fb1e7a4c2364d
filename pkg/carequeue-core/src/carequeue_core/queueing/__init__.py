from .base import DelayFunction
from .mm1 import MM1Delay
from .mms import MMsDelay, erlang_c_wait

__all__ = ["DelayFunction", "MM1Delay", "MMsDelay", "erlang_c_wait"]
