import json

from .core import Colouring, ColouredSystem, ConstructionCase, CycleSystem, Origin, Params, canonicalize
from .exceptions import DocumentValidationError, ImproperlyConfigured, MalformedBlock, SerializationError

SCHEMA_VERSION = 1

PARAM_KEYS = ('s', 'h', 'k', 'v', 'c', 'q', 'r')


class DocumentSerializer(object):
    """
    Reads and writes coloured systems as JSON documents. Blocks are stored in
    canonical form and sorted, so equal systems give byte-identical documents.
    """
    def to_document(self, colsys):
        params = colsys.params
        rows = sorted(
            (canonicalize(block).labels, colour, index)
            for index, (block, colour) in enumerate(zip(colsys.system.blocks, colsys.colouring.colours))
        )
        provenance = colsys.system.provenance
        return {
            'schema_version': SCHEMA_VERSION,
            'params': {
                's': params.s, 'h': params.h, 'k': params.k, 'v': params.v,
                'c': colsys.colouring.c, 'q': params.q, 'r': params.r,
            },
            'construction_case': str(colsys.construction_case),
            'blocks': [list(labels) for labels, _, _ in rows],
            'colours': [colour for _, colour, _ in rows],
            'provenance': None if provenance is None else [str(provenance[i]) for _, _, i in rows],
        }

    def dumps(self, colsys):
        return json.dumps(self.to_document(colsys), separators=(',', ':')).encode('utf-8')

    def loads(self, data):
        if isinstance(data, bytes):
            try:
                data = data.decode('utf-8')
            except UnicodeDecodeError as e:
                raise SerializationError('document', str(e))
        try:
            document = json.loads(data)
        except (ValueError, TypeError) as e:
            raise SerializationError('document', str(e))
        return self.from_document(document)

    def from_document(self, document):
        if not isinstance(document, dict):
            raise SerializationError('document', 'expected a JSON object')
        version = _field(document, 'schema_version', int)
        if version != SCHEMA_VERSION:
            raise SerializationError('schema_version', 'unsupported version %r' % (version, ))

        raw = _field(document, 'params', dict)
        values = {}
        for key in PARAM_KEYS:
            value = raw.get(key)
            if key == 'h' and value is None:
                values[key] = None
                continue
            if not isinstance(value, int) or isinstance(value, bool):
                raise SerializationError('params.%s' % key, 'expected an integer, got %r' % (value, ))
            values[key] = value
        params = _params(values)

        try:
            case = ConstructionCase(_field(document, 'construction_case', str))
        except ValueError as e:
            raise SerializationError('construction_case', str(e))

        blocks = _field(document, 'blocks', list)
        colours = _field(document, 'colours', list)
        if len(colours) != len(blocks):
            raise SerializationError('colours', '%d colours for %d blocks' % (len(colours), len(blocks)))

        cycles = []
        for index, labels in enumerate(blocks):
            location = 'blocks[%d]' % index
            if not isinstance(labels, list) or len(labels) != 4:
                raise SerializationError(location, 'a block is an array of 4 labels, got %r' % (labels, ))
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
                raise SerializationError(location, 'labels must be integers, got %r' % (labels, ))
            if not all(0 <= x < params.v for x in labels):
                raise DocumentValidationError(location, 'labels must lie in 0..%d, got %r' % (params.v - 1, labels))
            try:
                cycles.append(canonicalize(labels))
            except MalformedBlock as e:
                raise DocumentValidationError(location, str(e))

        for index, colour in enumerate(colours):
            if not isinstance(colour, int) or isinstance(colour, bool):
                raise SerializationError('colours[%d]' % index, 'expected an integer, got %r' % (colour, ))
            if not 1 <= colour <= values['c']:
                raise DocumentValidationError('colours[%d]' % index,
                                              'colour %r outside 1..%d' % (colour, values['c']))

        provenance = document.get('provenance')
        if provenance is not None:
            if not isinstance(provenance, list) or len(provenance) != len(blocks):
                raise SerializationError('provenance', 'expected one origin tag per block')
            try:
                provenance = tuple(Origin.parse(tag) for tag in provenance)
            except (ValueError, TypeError, AttributeError) as e:
                raise SerializationError('provenance', str(e))

        system = CycleSystem(params.v, tuple(cycles), provenance)
        return ColouredSystem(params, system, Colouring(tuple(colours), values['c']), case)


def _field(document, key, kind):
    if key not in document:
        raise SerializationError(key, 'missing')
    value = document[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SerializationError(key, 'expected %s, got %r' % (kind.__name__, value))
    return value


def _params(values):
    s, h, k, v, c, q, r = (values[key] for key in PARAM_KEYS)
    if s < 1 or k < 1 or c < 1:
        raise DocumentValidationError('params', 's, k and c must be positive')
    if v != 1 + 8 * k:
        raise DocumentValidationError('params.v', 'expected v = 1+8k = %d, got %d' % (1 + 8 * k, v))
    if (q, r) != divmod(4 * k, s):
        raise DocumentValidationError('params.q', 'q, r must split 4k = qs + r, got q=%d r=%d' % (q, r))
    if h is not None and h * s != k:
        raise DocumentValidationError('params.h', 'expected k = hs, got h=%d' % (h, ))
    try:
        return Params(s=s, h=h, k=k, v=v, q=q, r=r)
    except ImproperlyConfigured as e:
        raise DocumentValidationError('params', str(e))


serializer = DocumentSerializer()


def serialize(colsys):
    return serializer.dumps(colsys)


def deserialize(data):
    return serializer.loads(data)
