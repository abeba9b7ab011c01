__all__ = [
    'ImproperlyConfigured', 'FourCycleException', 'MalformedBlock',
    'MalformedParts', 'ConstructionError', 'CaseNotApplicable',
    'OutOfSpectrum', 'ConstructionInfeasible', 'DecompositionInfeasible',
    'OracleScaleExceeded', 'InvalidSubsystem', 'SerializationError',
    'DocumentValidationError', 'CheckTimeout',
]


class ImproperlyConfigured(Exception):
    """
    Exception raised when the parameters passed to an operation are
    inconsistent or invalid (``s = 0``, ``h = 0``, an order not congruent to
    1 modulo 8, ...).
    """


class FourCycleException(Exception):
    """
    Base class for all exceptions raised by this package's operations (doesn't
    apply to :class:`~fourcycle.exceptions.ImproperlyConfigured`).
    """


class MalformedBlock(FourCycleException):
    """ A block does not have four distinct non-negative labels. """


class MalformedParts(FourCycleException):
    """ The sets passed to ``[A,B]`` are odd-sized, empty or overlapping. """


class ConstructionError(FourCycleException):
    """
    Exception raised when a construction cannot be carried out. The ``case``
    is the construction that failed, ``info`` is whatever evidence is
    available (a report, the offending parameters).
    """
    @property
    def case(self):
        """ The construction (``base``, ``splus1``, ``mid``, ``high``, ...). """
        return self.args[0]

    @property
    def error(self):
        """ A string error message. """
        return self.args[1]

    @property
    def info(self):
        """ Dict or report with more information about the error. """
        return self.args[2] if len(self.args) > 2 else None

    def __str__(self):
        info = ''
        if self.info is not None:
            info = ', %r' % (self.info, )
        return '%s(%s, %r%s)' % (self.__class__.__name__, self.case, self.error, info)


class CaseNotApplicable(ConstructionError):
    """ The parameters lie outside the range a construction covers. """


class OutOfSpectrum(ConstructionError):
    """ ``c`` lies outside ``s..floor((2s^2+s)/3)``. """


class ConstructionInfeasible(ConstructionError):
    """ A construction ran out of choices inside its valid range. """


class DecompositionInfeasible(ConstructionInfeasible):
    """ The triangle/quadrilateral search was exhausted. """


class OracleScaleExceeded(ConstructionError):
    """ The exhaustive enumeration was asked for an instance too large. """


class InvalidSubsystem(ConstructionError):
    """ A subsystem factory returned something that is not a 4CS(1+8h). """


class SerializationError(FourCycleException):
    """
    A document could not be parsed. ``location`` pins the offending part of
    the document (``blocks[3]``, ``params.v``).
    """
    @property
    def location(self):
        return self.args[0]

    @property
    def error(self):
        return self.args[1]

    def __str__(self):
        return '%s(%s: %s)' % (self.__class__.__name__, self.location, self.error)


class DocumentValidationError(SerializationError):
    """ The document parsed but a label, colour or parameter is out of range. """


class CheckTimeout(FourCycleException):
    """ Building and verifying one colour count took longer than allowed. """
