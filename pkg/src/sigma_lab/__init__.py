from .graph6 import *
from .graphs import *
from .spectra import *
