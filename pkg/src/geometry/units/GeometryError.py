class GeometryError(Exception):
  pass

class DimensionMismatch(GeometryError):
  pass

class Unsupported(GeometryError):
  pass

class ZeroDirection(GeometryError):
  pass

class DegenerateBody(GeometryError):
  pass

class OutOfRange(GeometryError):
  pass

class NotATranslate(GeometryError):
  pass

class NonPositiveVolume(GeometryError):
  pass

class PreconditionViolated(GeometryError):
  pass

class DegenerateSample(GeometryError):
  pass
