from .format import OutputFormat


class TextFormat(OutputFormat):
    def render(self, obj) -> str:
        return str(obj)


FORMAT_TEXT = TextFormat(name='text', alt_names=['txt'], description='human readable')
