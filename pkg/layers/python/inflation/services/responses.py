from typing import Any, Dict

from inflation.output.tables import TableWriter

EXIT_CODES = {
    None: 0,
    "INVALID_DATA": 2,
    "NON_CONVERGENCE": 3,
    "INTERNAL_ERROR": 1,
}


def build_response(result: Dict[str, Any], out: str = None) -> Dict[str, Any]:
    """
    Traduce el resultado del servicio a la respuesta del handler.

    Args:
        result: Resultado de SpectralService
        out: Ruta de salida opcional

    Returns:
        Dict: {'exit_code', 'body', 'content_type', 'message'}
    """
    exit_code = 0 if result["success"] else EXIT_CODES.get(result.get("error_code"), 1)
    data = result.get("data")
    if not data:
        return {"exit_code": exit_code, "body": "", "content_type": "text/plain", "message": result["message"]}

    written = TableWriter(out).write(data["content"])
    if not written["success"]:
        return {
            "exit_code": EXIT_CODES["INTERNAL_ERROR"],
            "body": "",
            "content_type": "text/plain",
            "message": written["message"],
        }
    return {
        "exit_code": exit_code,
        "body": written["data"],
        "content_type": data["content_type"],
        "message": result["message"],
    }
