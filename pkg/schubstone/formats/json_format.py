import json

from .format import OutputFormat


class JSONFormat(OutputFormat):
    """Compact JSON of the object's to_json() value."""

    def render(self, obj) -> str:
        return json.dumps(obj.to_json(), separators=(',', ':'))

    def supports(self, obj) -> bool:
        return hasattr(obj, 'to_json')


FORMAT_JSON = JSONFormat(name='json', description='compact JSON')
