from .format import OutputFormat
from .text_format import FORMAT_TEXT
from .json_format import FORMAT_JSON
from .dot_format import FORMAT_DOT
