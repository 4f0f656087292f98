# -*- coding: utf-8 -*-
"""Exceptions module for freebycyclic."""


class FreeByCyclicException(Exception):
    """Base class for all freebycyclic exception classes."""

    reason_code = 'error'


class InputError(FreeByCyclicException):
    """Exception raised when user-supplied data cannot be used."""

    reason_code = 'input-error'


class InvalidBasis(InputError):
    """Exception when a list of generator names is not a free basis."""

    reason_code = 'invalid-basis'

    def __init__(self, generators, reason):
        """Initialize the exception with the offending generator names."""
        super(InvalidBasis, self).__init__(
            'The basis ({0}) is not valid: {1}.'.format(
                ', '.join(repr(g) for g in generators), reason))
        self.generators = tuple(generators)


class UnknownGenerator(InputError):
    """Exception when a letter references a generator outside the basis."""

    reason_code = 'unknown-generator'

    def __init__(self, name):
        """Initialize the exception with the unknown name."""
        super(UnknownGenerator, self).__init__(
            'The generator ({0!r}) is not part of the basis.'.format(name))
        self.name = name


class BasisMismatch(InputError):
    """Exception when two objects are defined over different bases."""

    reason_code = 'basis-mismatch'

    def __init__(self, left, right):
        """Initialize the error with both bases."""
        super(BasisMismatch, self).__init__(
            'Bases differ: {0} and {1}'.format(left, right))
        self.left = left
        self.right = right


class SpecParseError(InputError):
    """Exception raised when a spec file cannot be parsed."""

    reason_code = 'parse-error'

    def __init__(self, line_number, line, reason):
        """Initialize the error with the offending line."""
        if line_number is None:
            message = reason
        else:
            message = 'line {0}: {1} ({2!r})'.format(line_number, reason, line)
        super(SpecParseError, self).__init__(message)
        self.line_number = line_number
        self.line = line
        self.reason = reason


class ResourceLimitExceeded(FreeByCyclicException):
    """Exception raised when a computation outgrows its configured budget."""

    reason_code = 'budget-exceeded'


class WordLengthExceeded(ResourceLimitExceeded):
    """Exception when a reduced word grows past the word-length cap."""

    reason_code = 'word-length-exceeded'

    def __init__(self, limit, length):
        """Initialize the error with the cap and the length reached."""
        super(WordLengthExceeded, self).__init__(
            'Word of length {0} exceeds the cap of {1} letters.'.format(
                length, limit))
        self.limit = limit
        self.length = length


class BudgetExceeded(ResourceLimitExceeded):
    """Exception when a Cayley-graph exploration exceeds its budget."""

    def __init__(self, budget, reached):
        """Initialize the error with the budget and the partial size."""
        super(BudgetExceeded, self).__init__(
            'Exploration reached {0} elements, over the budget of {1}.'.format(
                reached, budget))
        self.budget = budget
        self.reached = reached


class VerificationError(FreeByCyclicException):
    """Exception raised when supplied data fails a verification."""

    reason_code = 'verification-failed'


class NotAnAutomorphism(VerificationError):
    """Exception when an endomorphism is not surjective."""

    reason_code = 'not-automorphism'

    def __init__(self, missing):
        """Initialize the error with the generator missing from the image."""
        super(NotAnAutomorphism, self).__init__(
            'Generator {0} is not in the image subgroup.'.format(missing))
        self.missing = missing


class UncertifiedAutomorphism(VerificationError):
    """Exception when an inverse is needed but none has been certified."""

    reason_code = 'uncertified'

    def __init__(self, operation):
        """Initialize the error with the operation that needed the inverse."""
        super(UncertifiedAutomorphism, self).__init__(
            '{0} needs a certified automorphism.'.format(operation))
        self.operation = operation


class FiltrationViolation(VerificationError):
    """Exception raised when a candidate representative violates a clause."""

    reason_code = 'filtration-violation'

    def __init__(self, clause, edge, reason):
        """Initialize the error with the violated clause and edge."""
        if edge is None:
            message = 'Property ({0}) fails: {1}'.format(clause, reason)
        else:
            message = 'Property ({0}) fails at edge {1}: {2}'.format(
                clause, edge, reason)
        super(FiltrationViolation, self).__init__(message)
        self.clause = clause
        self.edge = edge
        self.reason = reason


class IncidenceError(VerificationError):
    """Exception when consecutive steps of an edge path are not incident."""

    reason_code = 'incidence'

    def __init__(self, path, position):
        """Initialize the error with the path and the failing position."""
        super(IncidenceError, self).__init__(
            'Steps {0} and {1} of {2} are not incident.'.format(
                position - 1, position, path))
        self.path = path
        self.position = position


class NotNielsenPath(VerificationError):
    """Exception when a linear edge has a suffix which is not Nielsen."""

    reason_code = 'not-nielsen'

    def __init__(self, edge):
        """Initialize the error with the edge whose suffix failed."""
        super(NotNielsenPath, self).__init__(
            'The suffix of edge {0} is not a Nielsen path.'.format(edge))
        self.edge = edge


class GrowthError(FreeByCyclicException):
    """Exception raised when growth cannot be classified."""

    reason_code = 'inconclusive-growth'


class TooFewSamples(GrowthError):
    """Exception when a growth profile is too short to classify."""

    reason_code = 'too-few-samples'

    def __init__(self, count, needed):
        """Initialize the error with the sample counts."""
        super(TooFewSamples, self).__init__(
            '{0} samples given but {1} are needed.'.format(count, needed))
        self.count = count
        self.needed = needed


class InconclusiveGrowth(GrowthError):
    """Exception when an edge orbit has no clear polynomial degree."""

    def __init__(self, edge, profile):
        """Initialize the error with the flagged edge and its profile."""
        subject = 'the map' if edge is None else 'edge {0}'.format(edge)
        super(InconclusiveGrowth, self).__init__(
            'Growth of {0} is inconclusive (slope {1:.3f}, residual '
            '{2:.3f}).'.format(subject, profile.slope, profile.residual))
        self.edge = edge
        self.profile = profile


class RefusedError(FreeByCyclicException):
    """Exception raised when an input is outside what can be certified."""

    reason_code = 'refused'


class ExponentialGrowthRefused(RefusedError):
    """Exception when exponential growth is given to certification."""

    reason_code = 'exponential-growth'

    def __init__(self, profile):
        """Initialize the error with the classifying profile."""
        super(ExponentialGrowthRefused, self).__init__(
            'Exponential growth (ratio {0:.4f}): the mapping torus is '
            'relatively hyperbolic, not thick.'.format(profile.ratio))
        self.profile = profile


class BaseCaseError(RefusedError):
    """Exception when a splitting is requested for an all-invariant graph."""

    reason_code = 'base-case'

    def __init__(self, edge_count):
        """Initialize the error with the number of edges."""
        super(BaseCaseError, self).__init__(
            'All {0} edges are invariant; there is nothing to split.'.format(
                edge_count))
        self.edge_count = edge_count


class NotLinear(RefusedError):
    """Exception when the linear-case construction gets higher growth."""

    reason_code = 'not-linear'

    def __init__(self, eta):
        """Initialize the error with the degree found."""
        super(NotLinear, self).__init__(
            'Polynomial degree {0} found; tori and networks need degree at '
            'most 1.'.format(eta))
        self.eta = eta


class UnsupportedGrowth(RefusedError):
    """Exception when an operation needs a different polynomial degree."""

    reason_code = 'unsupported-degree'

    def __init__(self, eta, expected):
        """Initialize the error with the degree found and expected."""
        super(UnsupportedGrowth, self).__init__(
            'Polynomial degree {0} found; this operation needs {1}.'.format(
                eta, expected))
        self.eta = eta
        self.expected = expected


class ConsistencyError(FreeByCyclicException):
    """Exception raised when a computed object fails a self-check."""

    reason_code = 'internal-consistency'

    def __init__(self, reason):
        """Initialize the error with a description of the failed check."""
        super(ConsistencyError, self).__init__(reason)
        self.reason = reason


class ImageReducedWarning(UserWarning):
    """Warning issued when a map image had to be freely reduced."""


class IncompleteNetworkWarning(UserWarning):
    """Warning issued when a network could not chain every member."""
