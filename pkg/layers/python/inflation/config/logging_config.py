import logging
import os

import numpy as np


def configure_logging():
    """Configura los niveles de logging para los módulos de terceros."""
    level = os.environ.get('LOG_LEVEL', 'INFO').upper()
    logging.getLogger('inflation').setLevel(level)

    # Las advertencias de scipy.integrate y numpy pasan por logging
    logging.captureWarnings(True)
    logging.getLogger('py.warnings').setLevel(logging.ERROR)

    # log(0) en los conjuntos de ceros se trata explícitamente en el código
    np.seterr(divide='ignore', invalid='ignore')
