from aws_lambda_powertools.utilities.typing import LambdaContext

from inflation.config.logging_config import configure_logging
from inflation.config.settings import RunConfig
from inflation.exceptions import InflationSpectraError
from inflation.logger import get_logger
from inflation.services.responses import build_response
from inflation.services.spectral_service import SpectralService

# Configurar logging
configure_logging()

logger = get_logger("lyapunov_handler")
spectral_service = SpectralService()


def lambda_handler(event: dict, context: LambdaContext) -> dict:
    """
    Exponentes de Lyapunov sobre k muestreados.
    Delega toda la lógica al SpectralService.
    """
    try:
        config = RunConfig.from_event(event)
    except InflationSpectraError as e:
        logger.warning("Configuración inválida", extra={'error': str(e)})
        return build_response({'success': False, 'message': str(e), 'error_code': 'INVALID_DATA'})

    result = spectral_service.lyapunov(config)
    return build_response(result, config.out)
