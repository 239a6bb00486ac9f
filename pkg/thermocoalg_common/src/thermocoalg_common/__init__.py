from __future__ import absolute_import
from . import core
from . import tools
