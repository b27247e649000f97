from .instances import InstanceFileError, read_instance, write_instance, format_instance, parse_instance
from .generator import GeneratorSpec, GeneratorError, generate, KINDS

__all__ = [
    'InstanceFileError', 'read_instance', 'write_instance', 'format_instance', 'parse_instance',
    'GeneratorSpec', 'GeneratorError', 'generate', 'KINDS',
]
