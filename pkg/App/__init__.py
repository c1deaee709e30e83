from .models import *
from .controllers import *
from .main import *
