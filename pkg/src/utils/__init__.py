from .config import Config
from .exceptions import FreenessError

# DataHandler depends on the models package; import it from .data_handler
__all__ = ['Config', 'FreenessError']
