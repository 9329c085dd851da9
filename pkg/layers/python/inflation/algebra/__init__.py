from inflation.algebra.zlambda import AlgebraicPoint, integer_lambda, lambda_value

__all__ = ["AlgebraicPoint", "integer_lambda", "lambda_value"]
